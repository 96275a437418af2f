//! Jordan chain extraction through kernel rank profiles, plus the
//! realification of complex chains into rotation-block form. The chain
//! algorithm is generic over the coefficient field so the same code serves
//! ℚ (real eigenvalues) and ℚ(i) (complex pairs).

use super::mat::Mat;
use crate::scalar::{CRat, Rat, Scalar};

/// Jordan chains of a nilpotent-on-its-generalized-eigenspace matrix
/// N = A − λI, as lists of vectors bottom-first (index 0 is the
/// eigenvector). `alg_mult` is the algebraic multiplicity of λ.
pub(crate) fn jordan_chains<T: Scalar>(nmat: &Mat<T>, alg_mult: usize, tol: f64) -> Vec<Vec<Vec<T>>> {
    let n = nmat.nrows();
    let mut power = Mat::<T>::identity(n);
    let mut kernels: Vec<Vec<Vec<T>>> = vec![vec![]];
    loop {
        power = power.matmul(nmat);
        let ker = power.null_space(tol);
        let dim = ker.len();
        kernels.push(ker);
        if dim == alg_mult {
            break;
        }
        assert!(
            kernels.len() <= n + 1,
            "kernel growth stalled before reaching the algebraic multiplicity"
        );
    }
    let p = kernels.len() - 1;
    let mut chains: Vec<Vec<Vec<T>>> = vec![];
    for k in (1..=p).rev() {
        let want = kernels[k].len() - kernels[k - 1].len();
        let have = chains.iter().filter(|c| c.len() >= k).count();
        if have >= want {
            continue;
        }
        // candidates must be independent of ker N^{k-1} together with the
        // height-k vectors of chains already chosen
        let mut cols: Vec<Vec<T>> = kernels[k - 1].clone();
        for c in &chains {
            if c.len() >= k {
                cols.push(c[k - 1].clone());
            }
        }
        let mut need = want - have;
        for cand in &kernels[k] {
            if need == 0 {
                break;
            }
            let mut test = cols.clone();
            test.push(cand.clone());
            if Mat::from_columns(&test).rank(tol) == test.len() {
                let mut chain = vec![cand.clone()];
                for _ in 1..k {
                    let v = nmat.matvec(chain.last().unwrap());
                    chain.push(v);
                }
                chain.reverse();
                cols.push(cand.clone());
                chains.push(chain);
                need -= 1;
            }
        }
        assert_eq!(need, 0, "jordan chain extraction failed to find enough tops");
    }
    // stable output: longest chains first
    chains.sort_by(|a, b| b.len().cmp(&a.len()));
    chains
}

/// Converts a complex chain for eigenvalue s+it into real columns
/// (v_1, u_1, v_2, u_2, ...) where w_j = u_j + i·v_j, which conjugates the
/// pair of chains for s±it into rotation blocks [[s, −t], [t, s]] with I₂
/// couplings.
pub(crate) fn realify_chain(chain: &[Vec<CRat>]) -> Vec<Vec<Rat>> {
    let mut cols = Vec::with_capacity(2 * chain.len());
    for w in chain {
        let v: Vec<Rat> = w.iter().map(|z| z.im.clone()).collect();
        let u: Vec<Rat> = w.iter().map(|z| z.re.clone()).collect();
        cols.push(v);
        cols.push(u);
    }
    cols
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_i;

    #[test]
    fn nilpotent_two_chain() {
        // N = [[0,1],[0,0]]: single chain (e1, e2)
        let n = Mat::from_rows(vec![
            vec![rat_i(0), rat_i(1)],
            vec![rat_i(0), rat_i(0)],
        ]);
        let chains = jordan_chains(&n, 2, 0.0);
        assert_eq!(chains.len(), 1);
        assert_eq!(chains[0].len(), 2);
        assert_eq!(chains[0][0], vec![rat_i(1), rat_i(0)]);
        assert_eq!(chains[0][1], vec![rat_i(0), rat_i(1)]);
    }

    #[test]
    fn diagonal_two_singleton_chains() {
        let n: Mat<Rat> = Mat::zeros(2, 2);
        let chains = jordan_chains(&n, 2, 0.0);
        assert_eq!(chains.len(), 2);
        assert!(chains.iter().all(|c| c.len() == 1));
    }
}
