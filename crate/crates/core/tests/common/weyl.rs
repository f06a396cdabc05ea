//! Weyl dimension formula from a Cartan matrix `a[i][j] = <h_i, alpha_j>`.

use std::collections::BTreeSet;

/// Symmetrizer `d` with `d_i a_ij = d_j a_ji`, scaled to positive integers.
pub fn symmetrizer(a: &[Vec<i64>]) -> Vec<i64> {
    let r = a.len();
    // rationals as (num, den)
    let mut d: Vec<Option<(i64, i64)>> = vec![None; r];
    d[0] = Some((1, 1));
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..r {
            let Some((p, q)) = d[i] else { continue };
            for j in 0..r {
                if d[j].is_none() && a[i][j] != 0 {
                    d[j] = Some((p * a[i][j], q * a[j][i]));
                    changed = true;
                }
            }
        }
    }
    let d: Vec<(i64, i64)> = d.into_iter().map(|x| x.expect("connected diagram")).collect();
    let lcm = d.iter().fold(1, |acc, &(_, q)| acc / gcd(acc, q.abs()) * q.abs());
    d.iter().map(|&(p, q)| (p * (lcm / q)).abs()).collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Positive roots in simple-root coordinates, via root strings.
pub fn positive_roots(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = a.len();
    let simple = |j: usize| (0..r).map(|k| i64::from(k == j)).collect::<Vec<_>>();
    let mut roots: BTreeSet<Vec<i64>> = (0..r).map(simple).collect();
    let mut frontier: Vec<Vec<i64>> = roots.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for j in 0..r {
                let pairing: i64 = (0..r).map(|k| beta[k] * a[j][k]).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[j] -= 1;
                    if roots.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[j] += 1;
                    if roots.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        frontier = next;
    }
    roots.into_iter().collect()
}

/// `dim V(lambda)` for a dominant weight in fundamental-weight coordinates.
pub fn weyl_dimension(a: &[Vec<i64>], lambda: &[i64]) -> u128 {
    let d = symmetrizer(a);
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for beta in positive_roots(a) {
        let top: i64 = (0..a.len()).map(|k| beta[k] * d[k] * (lambda[k] + 1)).sum();
        let bottom: i64 = (0..a.len()).map(|k| beta[k] * d[k]).sum();
        num *= top as u128;
        den *= bottom as u128;
        let g = gcd_u(num, den);
        num /= g;
        den /= g;
    }
    assert_eq!(den, 1);
    num
}

fn gcd_u(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd_u(b, a % b)
    }
}
