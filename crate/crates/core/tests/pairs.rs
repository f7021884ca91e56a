use nilpairs::lie::{LieAlgebraModel, Sl2Triple};
use nilpairs::linalg::{q, RationalMatrix, Subspace};
use nilpairs::pairs::*;
use nilpairs::partition::{ClassicalFamily, Partition};

fn span(model: &LieAlgebraModel, xs: &[RationalMatrix]) -> Subspace {
    model.span(xs)
}

#[test]
fn sp4n_series_weights_and_type() {
    for n in 1..=3 {
        let s = construct_sp4n_series(n).unwrap();
        let quad = &s.quadruple;
        let z = quad.centralizer_of_pair();
        assert_eq!(z.dim(), 2 * n + 1);
        assert!(z.contains(&s.x));
        let cls = classify_pair(quad).unwrap();
        assert_eq!(cls.kind, PairKind::AlmostPrincipal);
        assert_eq!(cls.subtype, Some(AlmostSubtype::ZType));
        let mut got: Vec<(i64, i64)> = Vec::new();
        for ((a, b), d) in &cls.biweights {
            for _ in 0..*d {
                got.push((a.parse().unwrap(), b.parse().unwrap()));
            }
        }
        got.sort();
        let mut want = sp4n_expected_weights(n);
        want.sort();
        assert_eq!(got, want);
        assert!(centralizer_is_abelian(quad));
        assert_eq!(quad.e1.jordan_type().unwrap(), vec![2 * n, 2 * n]);
        let mut t2 = vec![2; 2 * n - 1];
        t2.extend([1, 1]);
        assert_eq!(quad.e2.jordan_type().unwrap(), t2);
    }
}

#[test]
fn sp4n_structure_checks() {
    let s = construct_sp4n_series(2).unwrap();
    let rep = verify_structure(&s.quadruple).unwrap();
    assert!(rep.all_pass(), "failed: {:?}", rep.failed());
}

#[test]
fn sp4n_richardson_at_one() {
    let s = construct_sp4n_series(1).unwrap();
    assert!(richardson_check(&s.quadruple, 1).unwrap());
    assert!(!richardson_check(&s.quadruple, 2).unwrap());
}

#[test]
fn sp4_examples() {
    let (z, nz) = construct_sp4_examples();
    let roots = sp4_positive_long_and_middle_roots();
    for quad in [&z, &nz] {
        let c = quad.centralizer_of_pair();
        assert_eq!(c.dim(), 3);
        assert_eq!(c, span(&quad.model, &roots));
        assert!(verify_structure(quad).unwrap().all_pass());
    }
    assert_eq!(classify_pair(&z).unwrap().subtype, Some(AlmostSubtype::ZType));
    assert_eq!(classify_pair(&nz).unwrap().subtype, Some(AlmostSubtype::NonZType));
    let theta = theta_involution(&nz).unwrap();
    assert_eq!(theta.dim, 6);
    assert!(theta.semisimple);
    assert!(theta.principal);
    assert_eq!(theta_involution(&z).err(), Some(PairError::WrongSubtype));
}

#[test]
fn swapping_preserves_classification() {
    let (z, nz) = construct_sp4_examples();
    for quad in [z, nz, construct_sl3_pair(), construct_sp4n_series(2).unwrap().quadruple] {
        let a = classify_pair(&quad).unwrap();
        let b = classify_pair(&quad.swapped()).unwrap();
        assert_eq!(a.kind, b.kind);
        assert_eq!(a.subtype, b.subtype);
        assert_eq!(a.dim_z, b.dim_z);
    }
}

#[test]
fn sl3_dual_pair() {
    let quad = construct_sl3_pair();
    let rep = dual_pair_check(&quad).unwrap();
    assert!(rep.mutual && rep.commute);
    assert!(!rep.reductive);
    assert_eq!(rep.rectangular, Rectangularity::Refuted);
    assert_eq!(rep.k1, span(&quad.model, &[quad.e2.clone(), quad.h2.clone()]));
    assert_eq!(rep.k2, span(&quad.model, &[quad.e1.clone(), quad.h1.clone()]));
}

#[test]
fn sp4n_dual_pair_dimension() {
    for n in 1..=2 {
        let quad = construct_sp4n_series(n).unwrap().quadruple;
        let rep = dual_pair_check(&quad).unwrap();
        assert!(rep.mutual);
        assert_eq!(rep.k1, span(&quad.model, &[quad.e2.clone(), quad.h2.clone()]));
        assert_eq!(rep.dim_k2, 2 * n * n - n + 1);
    }
}

#[test]
fn rectangular_sl_pairs() {
    for (n, m) in [(2, 2), (2, 3), (3, 3)] {
        let quad = construct_rect_pn_sl(n, m).unwrap();
        let cls = classify_pair(&quad).unwrap();
        assert_eq!(cls.kind, PairKind::Principal);
        assert_eq!(cls.dim_z, n * m - 1);
        for ((a, b), _) in &cls.biweights {
            let (a, b): (i64, i64) = (a.parse().unwrap(), b.parse().unwrap());
            assert!(a >= 0 && b >= 0 && (a, b) != (0, 0));
        }
        let rep = dual_pair_check(&quad).unwrap();
        assert!(rep.reductive && rep.mutual);
        assert_eq!(rep.rectangular, Rectangularity::Shown);
        assert!(rep.graded_surjective && rep.integral);
        assert!(verify_structure(&quad).unwrap().all_pass());
    }
}

#[test]
fn rectangular_sp_pair() {
    let quad = construct_rect_apn_sp(1, 2).unwrap();
    let cls = classify_pair(&quad).unwrap();
    assert_eq!(cls.kind, PairKind::AlmostPrincipal);
    let rep = dual_pair_check(&quad).unwrap();
    assert!(rep.reductive && rep.mutual);
    assert_eq!(rep.rectangular, Rectangularity::Shown);
}

#[test]
fn graded_compatibility_on_nilradical() {
    let quad = construct_sl3_pair();
    let g = quad.model.bigrading(&quad.h1, &quad.h2).unwrap();
    let n = g.sum_where(|w| w.0 > q(0) || (w.0 == q(0) && w.1 > q(0)));
    assert!(verify_graded_compatibility(&quad.model, &quad.h1, &quad.h2, &n).unwrap());
    let all = quad.model.algebra().clone();
    assert!(matches!(verify_graded_compatibility(&quad.model, &quad.h1, &quad.h2, &all), Err(PairError::PreconditionViolated(_))));
}

#[test]
fn conjugated_quadruple_still_passes() {
    // h1 + e1 is the image of h1 under exp(-ad e1), which fixes e1, e2, h2
    let quad = construct_sp4n_series(1).unwrap().quadruple;
    let moved = Quadruple::new(quad.model.clone(), quad.e1.clone(), quad.e2.clone(), quad.h1.add(&quad.e1), quad.h2.clone(), "moved").unwrap();
    assert!(verify_structure(&moved).unwrap().all_pass());
    let broken = Quadruple { h1: quad.h1.add(&quad.e2), ..quad };
    assert!(!broken.is_valid());
    assert_eq!(verify_structure(&broken).err(), Some(PairError::NotQuadruple));
}

#[test]
fn spr_pairs() {
    for (m, n, l) in [(3, 1, 0), (3, 1, 2), (3, 2, 1)] {
        let pair = construct_spr_sp(m, n, l, None).unwrap();
        let rep = verify_spr(&pair).unwrap();
        assert!(rep.all_pass(), "({m},{n},{l}) failed: {:?}", rep.failed());
    }
}

fn triple(fam: ClassicalFamily, p: &str) -> (LieAlgebraModel, Sl2Triple) {
    let model = LieAlgebraModel::new(fam);
    let t = model.triple_from_partition(&p.parse::<Partition>().unwrap()).unwrap();
    (model, t)
}

#[test]
fn sheet_sections() {
    for (fam, p) in [(ClassicalFamily::sl(6), "2,2,2"), (ClassicalFamily::sp(6), "2,2,2"), (ClassicalFamily::so(8), "2,2,2,2")] {
        let (model, t) = triple(fam, p);
        let s = sheet_section(&model, &t).unwrap();
        let ex = excellent_check_triple(&model, &t).unwrap();
        assert!(ex.report.all_pass(), "{fam} {p}: {:?}", ex.report.failed());
        assert_eq!(s.dim, s.dim_center);
        assert_eq!(s.dim, ex.certificate.rank_double_centralizer);
        assert!(s.constant_orbit_dim(), "{fam} {p}: {:?}", s.sample_orbit_dims);
        assert!(s.all_semisimple());
    }
}

#[test]
fn orbit_dimensions() {
    let (model, t) = triple(ClassicalFamily::sp(6), "2,2,2");
    assert_eq!(sheet_section(&model, &t).unwrap().expected_orbit_dim, 12);
    let (model, t) = triple(ClassicalFamily::sl(6), "2,2,2");
    assert_eq!(sheet_section(&model, &t).unwrap().expected_orbit_dim, 18);
}

#[test]
fn sl5_quasi_excellent_counterexample() {
    let (model, t) = triple(ClassicalFamily::sl(5), "3,2");
    let ex = excellent_check_triple(&model, &t).unwrap();
    assert!(ex.certificate.quasi_excellent);
    assert!(!ex.certificate.is_even);
    assert!(!ex.certificate.verdict);
    assert_eq!(ex.dim_double_centralizer_e, 2);
    assert_eq!(ex.certificate.rank_double_centralizer, 4);
    assert_eq!(sheet_section(&model, &t).err(), Some(PairError::NotExcellent));
}

#[test]
fn sp4_minimal_even_not_excellent() {
    let (model, t) = triple(ClassicalFamily::sp(4), "2,2");
    assert!(!excellent_check_triple(&model, &t).unwrap().certificate.verdict);
}

#[test]
fn matrix_check_from_nilpotent_alone() {
    let (model, t) = triple(ClassicalFamily::sp(6), "2,2,2");
    let a = excellent_check_matrix(&model, &t.e).unwrap();
    assert!(a.certificate.verdict);
}
