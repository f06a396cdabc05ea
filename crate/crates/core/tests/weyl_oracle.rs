mod common;

use common::weyl::{positive_roots, weyl_dimension};
use tabcrystal_core::tableau::bfs_highest_weight;
use tabcrystal_core::{Family, TypeSpec, Weight};

fn spec(f: Family, n: usize) -> TypeSpec {
    TypeSpec::new(f, n).unwrap()
}

fn dim(spec: &TypeSpec, lambda: &[i64]) -> u128 {
    weyl_dimension(spec.cartan_matrix(), lambda)
}

fn crystal_size(spec: &TypeSpec, lambda: &[i64]) -> usize {
    bfs_highest_weight(spec, &Weight::new(lambda.to_vec()), None).unwrap().node_count()
}

#[test]
fn oracle_reproduces_known_dimensions() {
    assert_eq!(positive_roots(spec(Family::G, 2).cartan_matrix()).len(), 6);
    assert_eq!(positive_roots(spec(Family::B, 3).cartan_matrix()).len(), 9);
    assert_eq!(positive_roots(spec(Family::D, 3).cartan_matrix()).len(), 12);
    assert_eq!(dim(&spec(Family::A, 2), &[1, 1]), 8);
    assert_eq!(dim(&spec(Family::G, 2), &[1, 0]), 7);
    assert_eq!(dim(&spec(Family::G, 2), &[0, 1]), 14);
    assert_eq!(dim(&spec(Family::B, 3), &[1, 0, 0]), 7);
    assert_eq!(dim(&spec(Family::C, 3), &[1, 0, 0]), 6);
    assert_eq!(dim(&spec(Family::D, 3), &[1, 0, 0, 0]), 8);
    assert_eq!(dim(&spec(Family::B, 2), &[0, 2]), 10);
}

#[test]
fn crystal_sizes_match_oracle() {
    let cases: &[(Family, usize, &[&[i64]])] = &[
        (Family::A, 1, &[&[1], &[4]]),
        (Family::A, 2, &[&[1, 0], &[1, 1], &[2, 1], &[0, 3]]),
        (Family::A, 3, &[&[1, 0, 1], &[0, 2, 0], &[1, 1, 1]]),
        (Family::B, 2, &[&[1, 0], &[0, 2], &[1, 2], &[2, 0]]),
        (Family::B, 3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2], &[1, 0, 2]]),
        (Family::C, 2, &[&[1, 0], &[0, 1], &[1, 1], &[2, 1]]),
        (Family::C, 3, &[&[1, 0, 0], &[0, 0, 1], &[1, 1, 0], &[0, 1, 1]]),
        (Family::D, 2, &[&[1, 0, 0], &[0, 1, 1], &[1, 2, 2]]),
        (Family::D, 3, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 1], &[1, 0, 2, 2]]),
        (Family::G, 2, &[&[1, 0], &[0, 1], &[1, 1], &[2, 0]]),
    ];
    for &(f, n, lambdas) in cases {
        let s = spec(f, n);
        for lambda in lambdas {
            assert_eq!(crystal_size(&s, lambda) as u128, dim(&s, lambda), "{f}{n} {lambda:?}");
        }
    }
}

#[test]
fn multiplicities_are_weyl_invariant() {
    for (f, n, lambda) in [
        (Family::A, 2, vec![2, 1]),
        (Family::B, 2, vec![1, 2]),
        (Family::C, 3, vec![1, 0, 1]),
        (Family::D, 3, vec![1, 0, 2, 2]),
        (Family::G, 2, vec![1, 1]),
    ] {
        let s = spec(f, n);
        let mult = bfs_highest_weight(&s, &Weight::new(lambda), None).unwrap().weight_multiplicities();
        for (mu, &m) in &mult {
            for i in s.indices() {
                let reflected = mu - &(s.simple_root(i) * mu[i - 1]);
                assert_eq!(mult.get(&reflected), Some(&m), "{f}{n}: s{i} {mu}");
            }
        }
    }
}
