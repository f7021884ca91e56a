use proptest::prelude::*;

use nilpairs::lie::{centralizer_dim_formula, LieAlgebraModel};
use nilpairs::linalg::{kernel_of_columns, q, Echelon, RationalMatrix, Subspace, Q};
use nilpairs::partition::{
    dominance_leq, excellent_by_rules, is_excellent, partitions_of, transpose, valid_partitions, ClassicalFamily,
    Family, Partition,
};

fn small_matrix(n: usize) -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec(-3i64..=3, n * n).prop_map(move |xs| RationalMatrix::from_flat(n, xs.into_iter().map(q).collect()))
}

fn partition_strategy(max: usize) -> impl Strategy<Value = Partition> {
    (1..=max).prop_flat_map(|n| {
        let ps = partitions_of(n);
        (0..ps.len()).prop_map(move |i| ps[i].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_is_antisymmetric_and_jacobi(a in small_matrix(3), b in small_matrix(3), c in small_matrix(3)) {
        prop_assert_eq!(a.bracket(&b), b.bracket(&a).scale(&q(-1)));
        let jac = a.bracket(&b.bracket(&c)).add(&b.bracket(&c.bracket(&a))).add(&c.bracket(&a.bracket(&b)));
        prop_assert!(jac.is_zero());
    }

    #[test]
    fn kernel_vectors_are_annihilated(cols in prop::collection::vec(prop::collection::vec(-4i64..=4, 4), 1..6)) {
        let cols: Vec<Vec<Q>> = cols.into_iter().map(|c| c.into_iter().map(q).collect()).collect();
        let ker = kernel_of_columns(&cols);
        let rank = Echelon::from_rows(4, cols.clone()).rank();
        prop_assert_eq!(ker.len() + rank, cols.len());
        for v in &ker {
            for row in 0..4 {
                let s: Q = cols.iter().zip(v).map(|(c, x)| &c[row] * x).sum();
                prop_assert_eq!(s, q(0));
            }
        }
    }

    #[test]
    fn subspace_dimension_formula(xs in prop::collection::vec(small_matrix(2), 0..4), ys in prop::collection::vec(small_matrix(2), 0..4)) {
        let a = Subspace::span(2, &xs);
        let b = Subspace::span(2, &ys);
        prop_assert_eq!(a.sum(&b).dim() + a.intersection(&b).dim(), a.dim() + b.dim());
    }

    #[test]
    fn transpose_reverses_dominance(p in partition_strategy(9), k in 0usize..50) {
        let ps = partitions_of(p.size());
        let other = &ps[k % ps.len()];
        prop_assert_eq!(transpose(&transpose(&p)), p.clone());
        prop_assert_eq!(dominance_leq(&p, other).unwrap(), dominance_leq(&transpose(other), &transpose(&p)).unwrap());
    }

    #[test]
    fn certificate_matches_rules(n in 2usize..=14, fam_idx in 0usize..3) {
        let fam = match fam_idx {
            0 => ClassicalFamily::sl(n),
            1 => ClassicalFamily::sp(2 * (n / 2).max(1)),
            _ => ClassicalFamily::so(n.max(3)),
        };
        for p in valid_partitions(fam) {
            let cert = is_excellent(fam, &p).unwrap();
            prop_assert_eq!(cert.verdict, excellent_by_rules(fam, &p));
            prop_assert_eq!(cert.quasi_excellent, cert.dim_center_levi == cert.rank_double_centralizer);
        }
    }
}

#[test]
fn partition_triples_match_formulas() {
    for fam in [ClassicalFamily::sl(5), ClassicalFamily::sp(6), ClassicalFamily::so(7), ClassicalFamily::so(8)] {
        let model = LieAlgebraModel::new(fam);
        for p in valid_partitions(fam) {
            let t = model.triple_from_partition(&p).unwrap();
            assert!(t.is_valid(), "{fam} {p}");
            assert_eq!(t.e.jordan_type().unwrap(), p.parts());
            let dz = model.centralizer(std::slice::from_ref(&t.e)).unwrap().dim();
            assert_eq!(dz, centralizer_dim_formula(fam, &p), "{fam} {p}");
        }
    }
}

#[test]
fn partition_counts() {
    // sequence of partition numbers
    let counts: Vec<usize> = (1..=10).map(|n| partitions_of(n).len()).collect();
    assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    // symplectic and orthogonal orbit counts
    let sp: Vec<usize> = (1..=5).map(|n| valid_partitions(ClassicalFamily::sp(2 * n)).len()).collect();
    assert_eq!(sp, vec![2, 4, 8, 14, 24]);
    let so_odd: Vec<usize> = (1..=4).map(|n| valid_partitions(ClassicalFamily::so(2 * n + 1)).len()).collect();
    assert_eq!(so_odd, vec![2, 4, 7, 13]);
    assert_eq!(Family::SO.name(), "so");
}
