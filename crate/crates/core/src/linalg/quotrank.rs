//! Rank of a polynomial matrix over the quotient ring ℚ[s]/(g) for
//! squarefree g. When elimination meets a pivot that is a zero divisor, the
//! discovered gcd splits g and the computation recurses on each factor, so
//! no up-front factorization of g is needed. Used to compute geometric
//! multiplicities of eigenvalue clusters with irrational members.

use super::unipoly::UniPoly;
use num_traits::One;

/// Extended Euclid: returns (gcd, x, y) monic with x·a + y·b = gcd.
fn ext_gcd(a: &UniPoly, b: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut x0 = UniPoly::one();
    let mut x1 = UniPoly::zero();
    let mut y0 = UniPoly::zero();
    let mut y1 = UniPoly::one();
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1);
        let nx = x0.sub(&q.mul(&x1));
        let ny = y0.sub(&q.mul(&y1));
        r0 = r1;
        r1 = r;
        x0 = x1;
        x1 = nx;
        y0 = y1;
        y1 = ny;
    }
    if r0.is_zero() {
        return (r0, x0, y0);
    }
    let lead = r0.leading().unwrap().recip();
    (
        r0.scale(&lead),
        x0.scale(&lead),
        y0.scale(&lead),
    )
}

fn reduce(p: &UniPoly, g: &UniPoly) -> UniPoly {
    p.divrem(g).1
}

/// Ranks of the matrix over ℚ[s]/(h) for each factor h of g discovered
/// during elimination; the factors are coprime and multiply to g.
pub fn rank_over_quotient(m: &[Vec<UniPoly>], g: &UniPoly) -> Vec<(UniPoly, usize)> {
    let reduced: Vec<Vec<UniPoly>> = m
        .iter()
        .map(|row| row.iter().map(|p| reduce(p, g)).collect())
        .collect();
    let mut out = Vec::new();
    rank_rec(reduced, g.monic(), 0, &mut out);
    out
}

fn rank_rec(mut m: Vec<Vec<UniPoly>>, g: UniPoly, rank_so_far: usize, out: &mut Vec<(UniPoly, usize)>) {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = rank_so_far;
    let mut r = 0;
    let mut c = 0;
    while r < rows && c < cols {
        // find a pivot in column c with an invertible entry; a zero-divisor
        // entry splits g instead
        let mut pivot: Option<usize> = None;
        for i in r..rows {
            let e = &m[i][c];
            if e.is_zero() {
                continue;
            }
            let (d, x, _) = ext_gcd(e, &g);
            if d.is_constant() {
                // invertible: x = e^{-1} mod g
                let inv = reduce(&x, &g);
                m.swap(i, r);
                for j in c..cols {
                    m[r][j] = reduce(&m[r][j].mul(&inv), &g);
                }
                pivot = Some(r);
                break;
            } else if d.degree() < g.degree() {
                // proper factor: split the computation
                let g1 = d.monic();
                let g2 = g.divrem(&g1).0.monic();
                let m1: Vec<Vec<UniPoly>> = m
                    .iter()
                    .map(|row| row.iter().map(|p| reduce(p, &g1)).collect())
                    .collect();
                let m2: Vec<Vec<UniPoly>> = m
                    .iter()
                    .map(|row| row.iter().map(|p| reduce(p, &g2)).collect())
                    .collect();
                rank_rec(m1, g1, rank, out);
                rank_rec(m2, g2, rank, out);
                return;
            }
            // d == g up to scale: entry is 0 in the quotient
        }
        match pivot {
            Some(_) => {
                for i in 0..rows {
                    if i != r && !m[i][c].is_zero() {
                        let f = m[i][c].clone();
                        for j in c..cols {
                            let v = m[i][j].sub(&f.mul(&m[r][j]));
                            m[i][j] = reduce(&v, &g);
                        }
                    }
                }
                rank += 1;
                r += 1;
                c += 1;
            }
            None => {
                c += 1;
            }
        }
    }
    out.push((g, rank));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat_i, Rat};

    fn c(v: i64) -> UniPoly {
        UniPoly::constant(rat_i(v))
    }

    fn s() -> UniPoly {
        UniPoly::x()
    }

    #[test]
    fn rank_of_a_minus_s_for_companion_of_x2_minus_2() {
        // A = [[0,2],[1,0]] has eigenvalues ±√2, each simple.
        // M = A - s·I over Q[s]/(s²-2) must have rank 1 (geometric mult 1).
        let g = UniPoly::from_coeffs(vec![rat_i(-2), Rat::from_integer(0.into()), rat_i(1)]);
        let m = vec![
            vec![s().neg(), c(2)],
            vec![c(1), s().neg()],
        ];
        let ranks = rank_over_quotient(&m, &g);
        assert_eq!(ranks.len(), 1);
        assert_eq!(ranks[0].1, 1);
    }

    #[test]
    fn splitting_on_reducible_modulus() {
        // g = s(s-1): entry s is a zero divisor; ranks differ per factor.
        let g = UniPoly::x().mul(&UniPoly::linear_root(&rat_i(1)));
        let m = vec![vec![s()]];
        let mut ranks = rank_over_quotient(&m, &g);
        ranks.sort_by_key(|(f, _)| f.degree());
        assert_eq!(ranks.len(), 2);
        // mod s: the entry is 0 → rank 0; mod (s-1): entry is 1 → rank 1
        let by_rank: Vec<usize> = ranks.iter().map(|(_, r)| *r).collect();
        assert!(by_rank.contains(&0) && by_rank.contains(&1));
    }
}
