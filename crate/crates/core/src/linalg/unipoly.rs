//! Univariate polynomials over ℚ: exact division, gcd, Yun squarefree
//! decomposition, Sturm chains, real-root isolation, and rational-root
//! recovery through simplest-rational probing of isolating intervals.

use crate::scalar::{rat_sign, rat_to_f64, simplest_rat_in, Rat};
use num_traits::{One, Signed, Zero};

/// Coefficients in ascending order, no trailing zeros (empty = zero).
#[derive(Clone, PartialEq, Debug)]
pub struct UniPoly {
    c: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { c: vec![] }
    }

    pub fn constant(r: Rat) -> Self {
        Self::from_coeffs(vec![r])
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn x() -> Self {
        Self::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    /// x - r
    pub fn linear_root(r: &Rat) -> Self {
        Self::from_coeffs(vec![-r.clone(), Rat::one()])
    }

    pub fn from_coeffs(mut c: Vec<Rat>) -> Self {
        while c.last().map_or(false, |x| x.is_zero()) {
            c.pop();
        }
        UniPoly { c }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.c.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.c.last()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.c.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.c.iter().rev() {
            acc = acc * x + rat_to_f64(c);
        }
        acc
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.c.iter().map(rat_to_f64).collect()
    }

    pub fn derivative(&self) -> Self {
        if self.c.len() <= 1 {
            return Self::zero();
        }
        Self::from_coeffs(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            c: self.c.iter().map(|x| -x.clone()).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.c.len().max(rhs.c.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rat::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Self::from_coeffs(self.c.iter().map(|x| x * s).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Exact Euclidean division: self = q·d + r with deg r < deg d.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let lead = d.leading().unwrap().clone();
        let mut r = self.c.clone();
        if r.len() < d.c.len() {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![Rat::zero(); r.len() - dd];
        while r.len() > dd {
            let k = r.len() - 1;
            let f = r[k].clone() / &lead;
            if !f.is_zero() {
                q[k - dd] = f.clone();
                for (i, dc) in d.c.iter().enumerate() {
                    let idx = k - dd + i;
                    let v = &r[idx] - &f * dc;
                    r[idx] = v;
                }
            }
            r.pop();
            while r.last().map_or(false, |x| x.is_zero()) {
                r.pop();
            }
            if r.len() <= dd {
                break;
            }
        }
        (Self::from_coeffs(q), Self::from_coeffs(r))
    }

    pub fn divides_exactly(&self, f: &Self) -> bool {
        let (_, r) = f.divrem(self);
        r.is_zero()
    }

    /// Monic gcd via the Euclidean algorithm with monic normalization.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.monic();
        let mut b = rhs.monic();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Radical: product of distinct irreducible factors (monic).
    pub fn squarefree_part(&self) -> Self {
        let d = self.derivative();
        if d.is_zero() {
            return self.monic();
        }
        let g = self.gcd(&d);
        if g.is_constant() {
            return self.monic();
        }
        let (q, r) = self.divrem(&g);
        debug_assert!(r.is_zero());
        q.monic()
    }

    /// Yun squarefree decomposition: self = lc·∏ fᵢ^i with fᵢ monic,
    /// squarefree, pairwise coprime. Returns (fᵢ, i) for deg fᵢ > 0.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        if self.is_constant() {
            return vec![];
        }
        let f = self.monic();
        let fp = f.derivative();
        let u = f.gcd(&fp);
        if u.is_constant() {
            return vec![(f, 1)];
        }
        let mut v = f.divrem(&u).0;
        let mut w = fp.divrem(&u).0;
        let mut out = Vec::new();
        let mut i = 1;
        while !v.is_constant() {
            let s = w.sub(&v.derivative());
            let h = if s.is_zero() {
                v.clone()
            } else {
                v.gcd(&s)
            };
            if !h.is_constant() {
                out.push((h.monic(), i));
            }
            v = v.divrem(&h).0;
            if s.is_zero() {
                break;
            }
            w = s.divrem(&h).0;
            i += 1;
        }
        out
    }

    /// Multiplicity of an exact rational root.
    pub fn root_multiplicity(&self, r: &Rat) -> usize {
        let lin = Self::linear_root(r);
        let mut f = self.clone();
        let mut m = 0;
        loop {
            let (q, rem) = f.divrem(&lin);
            if rem.is_zero() {
                m += 1;
                f = q;
                if f.is_zero() {
                    break;
                }
            } else {
                break;
            }
        }
        m
    }

    /// Strict bound B with every real root in (−B, B) (Cauchy bound).
    pub fn root_bound(&self) -> Rat {
        let lead = self.leading().expect("root bound of zero polynomial");
        let mut m = Rat::zero();
        for c in &self.c[..self.c.len() - 1] {
            let q = (c / lead).abs();
            if q > m {
                m = q;
            }
        }
        m + Rat::one() + Rat::one()
    }
}

/// Sturm chain of the squarefree part; index 0 is the squarefree polynomial.
pub struct SturmChain {
    seq: Vec<UniPoly>,
}

impl SturmChain {
    pub fn new(f: &UniPoly) -> Self {
        let f0 = f.squarefree_part();
        let mut seq = vec![f0.clone()];
        if f0.degree().unwrap_or(0) >= 1 {
            seq.push(f0.derivative());
            loop {
                let k = seq.len();
                let (_, r) = seq[k - 2].divrem(&seq[k - 1]);
                if r.is_zero() {
                    break;
                }
                seq.push(r.neg());
                if seq.last().unwrap().is_constant() {
                    break;
                }
            }
        }
        SturmChain { seq }
    }

    pub fn poly(&self) -> &UniPoly {
        &self.seq[0]
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &Rat) -> usize {
        Self::variations(self.seq.iter().map(|p| rat_sign(&p.eval(x))))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::variations(
            self.seq
                .iter()
                .map(|p| p.leading().map_or(0, rat_sign)),
        )
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        Self::variations(self.seq.iter().map(|p| {
            let s = p.leading().map_or(0, rat_sign);
            if p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Distinct real roots in the open interval (a, b); requires that
    /// neither endpoint is a root.
    pub fn count_roots_open(&self, a: &Rat, b: &Rat) -> usize {
        assert!(a < b);
        assert!(!self.poly().eval(a).is_zero() && !self.poly().eval(b).is_zero());
        self.variations_at(a) - self.variations_at(b)
    }

    /// Total number of distinct real roots.
    pub fn count_real_roots(&self) -> usize {
        if self.poly().is_constant() {
            return 0;
        }
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }
}

/// Location of one distinct real root of a squarefree polynomial.
#[derive(Clone, Debug, PartialEq)]
pub enum RootInterval {
    /// The root is this exact rational.
    Exact(Rat),
    /// Exactly one root in the open interval; endpoints are not roots.
    Open(Rat, Rat),
}

impl RootInterval {
    pub fn approx_f64(&self) -> f64 {
        match self {
            RootInterval::Exact(r) => rat_to_f64(r),
            RootInterval::Open(a, b) => (rat_to_f64(a) + rat_to_f64(b)) / 2.0,
        }
    }
}

/// Isolates all distinct real roots of `f` (any multiplicities) into
/// disjoint intervals, ordered increasing.
pub fn isolate_real_roots(f: &UniPoly) -> Vec<RootInterval> {
    let chain = SturmChain::new(f);
    let sf = chain.poly().clone();
    if sf.is_constant() {
        return vec![];
    }
    let bound = sf.root_bound();
    let mut out = Vec::new();
    let total = chain.count_roots_open(&-bound.clone(), &bound);
    split(&chain, &sf, -bound.clone(), bound.clone(), total, &mut out);
    out.sort_by(|x, y| interval_key(x).partial_cmp(&interval_key(y)).unwrap());
    out
}

fn interval_key(r: &RootInterval) -> f64 {
    r.approx_f64()
}

fn split(
    chain: &SturmChain,
    sf: &UniPoly,
    lo: Rat,
    hi: Rat,
    count: usize,
    out: &mut Vec<RootInterval>,
) {
    if count == 0 {
        return;
    }
    if count == 1 {
        out.push(RootInterval::Open(lo, hi));
        return;
    }
    let two = Rat::one() + Rat::one();
    let mid = (&lo + &hi) / &two;
    if sf.eval(&mid).is_zero() {
        out.push(RootInterval::Exact(mid.clone()));
        // shrink a gap around mid that contains no other root
        let mut w = (&hi - &lo) / Rat::from_integer(4.into());
        loop {
            let a = &mid - &w;
            let b = &mid + &w;
            if !sf.eval(&a).is_zero()
                && !sf.eval(&b).is_zero()
                && chain.count_roots_open(&a, &b) == 1
            {
                let left = chain.count_roots_open(&lo, &a);
                let right = chain.count_roots_open(&b, &hi);
                split(chain, sf, lo, a, left, out);
                split(chain, sf, b, hi, right, out);
                return;
            }
            w /= &two;
        }
    }
    let left = chain.count_roots_open(&lo, &mid);
    split(chain, sf, lo.clone(), mid.clone(), left, out);
    split(chain, sf, mid, hi, count - left, out);
}

/// Bisects an isolating interval of a squarefree polynomial down to the
/// requested width. Sign-change bisection is valid because the single root
/// is simple.
pub fn refine_root(sf: &UniPoly, interval: &RootInterval, target_width: &Rat) -> RootInterval {
    let (mut lo, mut hi) = match interval {
        RootInterval::Exact(r) => return RootInterval::Exact(r.clone()),
        RootInterval::Open(a, b) => (a.clone(), b.clone()),
    };
    let two = Rat::one() + Rat::one();
    let slo = rat_sign(&sf.eval(&lo));
    debug_assert!(slo != 0 && rat_sign(&sf.eval(&hi)) != 0);
    while &hi - &lo > *target_width {
        let mid = (&lo + &hi) / &two;
        let sm = rat_sign(&sf.eval(&mid));
        if sm == 0 {
            return RootInterval::Exact(mid);
        }
        if sm == slo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    RootInterval::Open(lo, hi)
}

/// Attempts to identify the root in an isolating interval as an exact
/// rational by probing with the simplest rational the interval contains.
/// Complete for denominators up to roughly 2^120.
pub fn rational_root_in(sf: &UniPoly, interval: &RootInterval) -> Option<Rat> {
    let mut iv = interval.clone();
    if let RootInterval::Exact(r) = &iv {
        return Some(r.clone());
    }
    let mut width = match &iv {
        RootInterval::Open(a, b) => b - a,
        _ => unreachable!(),
    };
    let two = Rat::one() + Rat::one();
    for _ in 0..260 {
        if let RootInterval::Open(a, b) = &iv {
            let cand = simplest_rat_in(a, b);
            if sf.eval(&cand).is_zero() {
                return Some(cand);
            }
        }
        width /= &two;
        iv = refine_root(sf, &iv, &width);
        if let RootInterval::Exact(r) = &iv {
            return Some(r.clone());
        }
    }
    None
}

/// All rational roots with multiplicities.
pub fn rational_roots(f: &UniPoly) -> Vec<(Rat, usize)> {
    let mut out = Vec::new();
    for (factor, mult) in f.squarefree_decomposition() {
        for iv in isolate_real_roots(&factor) {
            if let Some(r) = rational_root_in(&factor, &iv) {
                out.push((r, mult));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_i};

    fn poly(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| rat_i(c)).collect())
    }

    #[test]
    fn divrem_exact() {
        // (x^2 - 1) = (x - 1)(x + 1)
        let f = poly(&[-1, 0, 1]);
        let d = poly(&[-1, 1]);
        let (q, r) = f.divrem(&d);
        assert!(r.is_zero());
        assert_eq!(q, poly(&[1, 1]));
    }

    #[test]
    fn gcd_and_squarefree() {
        // f = x^2 (x+1), radical = x(x+1)
        let f = poly(&[0, 0, 1, 1]);
        assert_eq!(f.squarefree_part(), poly(&[0, 1, 1]).monic());
        let dec = f.squarefree_decomposition();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0], (poly(&[1, 1]), 1));
        assert_eq!(dec[1], (poly(&[0, 1]), 2));
    }

    #[test]
    fn sturm_counts() {
        // x^2 - 2: two real roots, none rational
        let f = poly(&[-2, 0, 1]);
        let chain = SturmChain::new(&f);
        assert_eq!(chain.count_real_roots(), 2);
        // x^2 + 4: no real roots
        assert_eq!(SturmChain::new(&poly(&[4, 0, 1])).count_real_roots(), 0);
        // roots of x^2-2 in (1,2): one
        assert_eq!(chain.count_roots_open(&rat_i(1), &rat_i(2)), 1);
    }

    #[test]
    fn isolation_and_rational_recovery() {
        // (x - 1/3)(x + 2)(x^2 - 2) — rational roots 1/3, -2
        let f = poly(&[1, 0, -1])
            .neg() // x^2 - 1... build explicitly instead:
            ;
        let _ = f;
        let g = UniPoly::linear_root(&rat(1, 3))
            .mul(&UniPoly::linear_root(&rat_i(-2)))
            .mul(&poly(&[-2, 0, 1]));
        let roots = isolate_real_roots(&g);
        assert_eq!(roots.len(), 4);
        let rats = rational_roots(&g);
        assert_eq!(rats, vec![(rat_i(-2), 1), (rat(1, 3), 1)]);
    }

    #[test]
    fn multiplicity() {
        let f = UniPoly::linear_root(&rat_i(5))
            .mul(&UniPoly::linear_root(&rat_i(5)))
            .mul(&UniPoly::linear_root(&rat_i(1)));
        assert_eq!(f.root_multiplicity(&rat_i(5)), 2);
        assert_eq!(f.root_multiplicity(&rat_i(1)), 1);
        assert_eq!(f.root_multiplicity(&rat_i(2)), 0);
    }
}
