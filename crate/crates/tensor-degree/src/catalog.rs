//! Named small groups with canonical, reproducible element orderings.
//!
//! Supported expressions:
//!
//! * `C<n>` — cyclic of order n; element `i` is the generator to the i-th
//!   power, so `i * j = (i + j) mod n`.
//! * `D<n>` — dihedral of order 2n; element `a*n + b` is `s^a r^b` with
//!   `r^n = s^2 = 1`, `r^s = r^-1`. Rotations come first.
//! * `Dic<m>` — dicyclic of order 4m; element `j*2m + i` is `a^i b^j` with
//!   `a^2m = 1`, `b^2 = a^m`, `a^b = a^-1`.
//! * `Q8`, `Q16` — the quaternion groups, as `Dic2` and `Dic4`.
//! * `S3`, `S4` — symmetric groups; elements are permutations in
//!   lexicographic order of one-line notation, composed as
//!   `(p * q)(x) = p(q(x))`.
//! * `A4` — even permutations of four points, lexicographic.
//! * Products joined with `x`, e.g. `C2xC2xC2`; elements are ordered
//!   lexicographically by factor indices (row-major).
//!
//! The identity is index 0 in every ordering.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Builds the catalog group named by `expr`.
pub fn group(expr: &str) -> Result<Arc<FiniteGroup>> {
    let factors: Vec<&str> = expr.split('x').collect();
    if factors.iter().any(|f| f.is_empty()) {
        return Err(Error::UnknownGroup(expr.to_string()));
    }
    let mut tables = Vec::with_capacity(factors.len());
    for f in &factors {
        tables.push(atom_table(f).ok_or_else(|| Error::UnknownGroup(expr.to_string()))?);
    }
    let table = tables
        .into_iter()
        .reduce(direct_product)
        .expect("at least one factor");
    Ok(Arc::new(
        FiniteGroup::from_table(table, expr).expect("catalog construction is a group"),
    ))
}

/// The census default: abelian oracles, trivial-multiplier cases (S3, Q8),
/// nontrivial-multiplier cases (C2xC2, D4, A4), and both equality and strict
/// regimes of the degree bounds.
pub fn default_catalog() -> Vec<&'static str> {
    vec![
        "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "C2xC2",
        "C2xC2xC2", "C4xC2", "C3xC3", "S3", "D4", "D5", "D6", "Q8", "A4", "Dic3",
    ]
}

/// For a product of cyclics (`C1`, `C6`, `C2xC4`, ...), the list of cyclic
/// factor orders; `None` when any factor is nonabelian or unknown. This is
/// what the abelian tensor/exterior square oracles consume.
pub fn cyclic_factors(expr: &str) -> Option<Vec<u64>> {
    expr.split('x')
        .map(|f| {
            f.strip_prefix('C')
                .and_then(|d| d.parse::<u64>().ok())
                .filter(|&n| n >= 1)
        })
        .collect()
}

fn atom_table(name: &str) -> Option<Vec<Vec<usize>>> {
    if let Some(digits) = name.strip_prefix("Dic") {
        let m: usize = digits.parse().ok().filter(|&m| m >= 1)?;
        return Some(dicyclic(m));
    }
    if let Some(digits) = name.strip_prefix('C') {
        let n: usize = digits.parse().ok().filter(|&n| n >= 1)?;
        return Some(cyclic(n));
    }
    if let Some(digits) = name.strip_prefix('D') {
        let n: usize = digits.parse().ok().filter(|&n| n >= 1)?;
        return Some(dihedral(n));
    }
    match name {
        "Q8" => Some(dicyclic(2)),
        "Q16" => Some(dicyclic(4)),
        "S3" => Some(symmetric(3)),
        "S4" => Some(symmetric(4)),
        "A4" => Some(alternating4()),
        _ => None,
    }
}

fn cyclic(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

fn dihedral(n: usize) -> Vec<Vec<usize>> {
    let order = 2 * n;
    let idx = |a: usize, b: usize| a * n + b;
    let mut t = vec![vec![0; order]; order];
    for a in 0..2 {
        for b in 0..n {
            for c in 0..2 {
                for d in 0..n {
                    // (s^a r^b)(s^c r^d) = s^(a xor c) r^(d +- b)
                    let e = if c == 1 { (n + d - b % n) % n + 0 } else { (b + d) % n };
                    let e = if c == 1 { (d + n - b % n) % n } else { e };
                    t[idx(a, b)][idx(c, d)] = idx(a ^ c, e);
                }
            }
        }
    }
    t
}

fn dicyclic(m: usize) -> Vec<Vec<usize>> {
    let n = 2 * m;
    let order = 4 * m;
    let idx = |i: usize, j: usize| j * n + i;
    let mut t = vec![vec![0; order]; order];
    for i in 0..n {
        for j in 0..2 {
            for k in 0..n {
                for l in 0..2 {
                    // (a^i b^j)(a^k b^l), using b a^k = a^-k b and b^2 = a^m
                    let entry = if j == 0 {
                        idx((i + k) % n, l)
                    } else if l == 0 {
                        idx((i + n - k) % n, 1)
                    } else {
                        idx((i + n - k + m) % n, 0)
                    };
                    t[idx(i, j)][idx(k, l)] = entry;
                }
            }
        }
    }
    t
}

fn permutations_lex(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut current: Vec<usize> = Vec::new();
    fn rec(n: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !current.contains(&v) {
                current.push(v);
                rec(n, current, out);
                current.pop();
            }
        }
    }
    rec(n, &mut current, &mut out);
    out
}

fn perm_table(perms: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed set");
    perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| {
                    let composed: Vec<usize> = (0..p.len()).map(|x| p[q[x]]).collect();
                    index(&composed)
                })
                .collect()
        })
        .collect()
}

fn symmetric(n: usize) -> Vec<Vec<usize>> {
    perm_table(permutations_lex(n))
}

fn alternating4() -> Vec<Vec<usize>> {
    let even: Vec<Vec<usize>> = permutations_lex(4)
        .into_iter()
        .filter(|p| {
            let mut inversions = 0;
            for i in 0..4 {
                for j in (i + 1)..4 {
                    if p[i] > p[j] {
                        inversions += 1;
                    }
                }
            }
            inversions % 2 == 0
        })
        .collect();
    perm_table(even)
}

fn direct_product(a: Vec<Vec<usize>>, b: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let (na, nb) = (a.len(), b.len());
    let n = na * nb;
    let mut t = vec![vec![0; n]; n];
    for i1 in 0..na {
        for i2 in 0..nb {
            for j1 in 0..na {
                for j2 in 0..nb {
                    t[i1 * nb + i2][j1 * nb + j2] = a[i1][j1] * nb + b[i2][j2];
                }
            }
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Subgroup;

    #[test]
    fn orders_of_catalog_groups() {
        for (expr, order) in [
            ("C1", 1),
            ("C7", 7),
            ("D4", 8),
            ("D6", 12),
            ("Q8", 8),
            ("Q16", 16),
            ("S3", 6),
            ("S4", 24),
            ("A4", 12),
            ("Dic3", 12),
            ("C2xC2", 4),
            ("C2xC2xC2", 8),
            ("C4xC2", 8),
            ("C3xC3", 9),
        ] {
            assert_eq!(group(expr).unwrap().order(), order, "{expr}");
        }
    }

    #[test]
    fn unknown_expressions_rejected() {
        for expr in ["", "Z5", "C", "Cx", "C2x", "xC2", "Q7", "S5", "A5", "C0", "D0"] {
            assert!(group(expr).is_err(), "{expr:?} should be rejected");
        }
    }

    #[test]
    fn s3_structure() {
        let g = group("S3").unwrap();
        assert_eq!(g.order_profile(), vec![1, 2, 2, 2, 3, 3]);
        assert!(!g.is_abelian());
    }

    #[test]
    fn dihedral_relations() {
        let g = group("D5").unwrap();
        // r = index 1 (rotation), s = index 5 (first reflection)
        let (r, s) = (1, 5);
        assert_eq!(g.element_order(r), 5);
        assert_eq!(g.element_order(s), 2);
        // s r s = r^-1
        assert_eq!(g.conj(r, s), g.inv(r));
    }

    #[test]
    fn dicyclic_relations() {
        let g = group("Dic3").unwrap();
        let (a, b) = (1, 6);
        assert_eq!(g.element_order(a), 6);
        // b^2 = a^3
        let a3 = g.mul(g.mul(a, a), a);
        assert_eq!(g.mul(b, b), a3);
        assert_eq!(g.conj(a, b), g.inv(a));
    }

    #[test]
    fn q8_is_the_quaternion_group() {
        let g = group("Q8").unwrap();
        assert_eq!(g.order_profile(), vec![1, 2, 4, 4, 4, 4, 4, 4]);
        // exactly one element of order 2 (that is -1), and it is central
        let minus_one = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
        let whole = Subgroup::whole(&g);
        assert!(whole.centralizer_of(&[minus_one]).is_whole_group());
    }

    #[test]
    fn a4_has_no_order_six_subgroup_profile() {
        let g = group("A4").unwrap();
        assert_eq!(g.order_profile(), vec![1, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3]);
    }

    #[test]
    fn product_ordering_is_row_major() {
        let g = group("C2xC3").unwrap();
        // element (a, b) has index a*3 + b; (1,0)*(0,1) = (1,1) = index 4
        assert_eq!(g.mul(3, 1), 4);
        assert_eq!(g.element_order(3), 2);
        assert_eq!(g.element_order(1), 3);
    }

    #[test]
    fn cyclic_factor_extraction() {
        assert_eq!(cyclic_factors("C6"), Some(vec![6]));
        assert_eq!(cyclic_factors("C2xC2xC2"), Some(vec![2, 2, 2]));
        assert_eq!(cyclic_factors("C4xC2"), Some(vec![4, 2]));
        assert_eq!(cyclic_factors("S3"), None);
        assert_eq!(cyclic_factors("C2xS3"), None);
    }

    #[test]
    fn default_catalog_all_build() {
        for expr in default_catalog() {
            let g = group(expr).unwrap();
            assert!(g.order() <= 12, "{expr} exceeds the documented size range");
        }
    }
}
