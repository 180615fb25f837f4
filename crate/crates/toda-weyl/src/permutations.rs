//! Cyclic rotations of the type A index set, permutation mass formulas,
//! the palindromic permutation group used for C^t head and tail sets, and
//! the folding of C^t vectors into type A.

use std::fmt;

use crate::algebra::{rat, AlgebraSpec, Family, LinForm, MassVector};
use crate::cartan::ConsecutiveSet;
use crate::chains::mu_star;
use crate::error::{Error, Result};
use crate::weyl::{apply_word, apply_word_weighted, Word};

/// The rotation `f(i) = ((r - 1 + i - 1) mod (n+1)) + 1`; `f(1) = r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CyclicRotation {
    r: usize,
    size: usize,
}

impl CyclicRotation {
    pub fn new(r: usize, size: usize) -> Result<Self> {
        if r == 0 || r > size {
            return Err(Error::Domain(format!(
                "rotation start {r} outside 1..={size}"
            )));
        }
        Ok(CyclicRotation { r, size })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn map(&self, i: usize) -> usize {
        (self.r - 1 + i - 1) % self.size + 1
    }

    pub fn inverse_map(&self, i: usize) -> usize {
        (i - 1 + self.size - (self.r - 1)) % self.size + 1
    }

    pub fn inverse(&self) -> CyclicRotation {
        CyclicRotation {
            r: self.inverse_map(1),
            size: self.size,
        }
    }
}

/// `out_i = v_{f(i)}`.
pub fn rotate_vector(v: &MassVector, rot: &CyclicRotation) -> Result<MassVector> {
    let spec = v.spec();
    if spec.family != Family::AffineA {
        return Err(Error::Domain(
            "rotations are a symmetry of the type A diagram only".into(),
        ));
    }
    if rot.size() != spec.size() {
        return Err(Error::Domain(format!(
            "rotation of size {} applied to {}",
            rot.size(),
            spec
        )));
    }
    let entries = spec.indices().map(|i| v.get(rot.map(i)).clone()).collect();
    MassVector::new(spec, entries)
}

/// The weights `mu'_i = mu_{f(i)}`.
pub fn rotated_weights(rot: &CyclicRotation) -> Vec<LinForm> {
    (1..=rot.size()).map(|i| LinForm::mu(rot.map(i))).collect()
}

/// Relabel `w` letterwise by `f^{-1}`: under the rotated weights the new
/// word sends zero to the rotation of what `w` produces.
pub fn rotation_covariance(w: &Word, rot: &CyclicRotation) -> Word {
    w.relabel(|i| rot.inverse_map(i))
}

/// Check the covariance identity for one word and rotation.
pub fn check_rotation_covariance(
    w: &Word,
    rot: &CyclicRotation,
    spec: AlgebraSpec,
) -> Result<bool> {
    let zero = MassVector::zero(spec);
    let expected = rotate_vector(&apply_word(w, &zero)?, rot)?;
    let relabeled = rotation_covariance(w, rot);
    let got = apply_word_weighted(&relabeled, &zero, &rotated_weights(rot))?;
    Ok(got == expected)
}

/// A bijection of `{0..m}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinitePermutation {
    values: Vec<usize>,
}

fn check_bijection(values: &[usize]) -> Result<()> {
    let mut seen = vec![false; values.len()];
    for &v in values {
        if v >= values.len() || seen[v] {
            return Err(Error::Domain(format!(
                "{values:?} is not a permutation of 0..{}",
                values.len()
            )));
        }
        seen[v] = true;
    }
    Ok(())
}

impl FinitePermutation {
    /// `values[j] = f(j)`.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        check_bijection(&values)?;
        Ok(FinitePermutation { values })
    }

    pub fn identity(m: usize) -> Self {
        FinitePermutation {
            values: (0..=m).collect(),
        }
    }

    /// `f(j) = m - j`.
    pub fn reverse(m: usize) -> Self {
        FinitePermutation {
            values: (0..=m).rev().collect(),
        }
    }

    /// Largest point `m`.
    pub fn m(&self) -> usize {
        self.values.len() - 1
    }

    pub fn apply(&self, j: usize) -> usize {
        self.values[j]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }
}

/// Prefix sums `P(k) = sum_{j=1}^k w_j`, with `P(0) = 0`.
fn prefix_sums(weights: &[LinForm]) -> Vec<LinForm> {
    let mut out = vec![LinForm::zero()];
    for w in weights {
        let next = out.last().expect("nonempty") + w;
        out.push(next);
    }
    out
}

/// `sigma_i = 2 sum_{l=0}^{i-1} (P(f(l)) - P(l))` for `i = 1..m`, where `P`
/// are the prefix sums of `weights` (the even-integer shifts are omitted).
pub fn finite_a_mass(f: &FinitePermutation, weights: &[LinForm]) -> Result<Vec<LinForm>> {
    let m = weights.len();
    if f.m() != m {
        return Err(Error::Domain(format!(
            "permutation of 0..={} used with {m} weights",
            f.m()
        )));
    }
    let p = prefix_sums(weights);
    let two = rat(2);
    let mut acc = LinForm::zero();
    let mut out = Vec::with_capacity(m);
    for l in 0..m {
        acc.add_scaled(&p[f.apply(l)], &two);
        acc.add_scaled(&p[l], &-two.clone());
        out.push(acc.clone());
    }
    Ok(out)
}

/// A permutation `f` of `{0..2l+1}` with `f(j) + f(2l+1-j) = 2l+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SPermC {
    l: usize,
    values: Vec<usize>,
}

impl SPermC {
    pub fn new(l: usize, values: Vec<usize>) -> Result<Self> {
        if values.len() != 2 * l + 2 {
            return Err(Error::Domain(format!(
                "expected {} values for l={l}",
                2 * l + 2
            )));
        }
        check_bijection(&values)?;
        let f = SPermC { l, values };
        if !f.satisfies_constraint() {
            return Err(Error::Domain(format!(
                "{:?} violates f(j) + f(2l+1-j) = 2l+1",
                f.values
            )));
        }
        Ok(f)
    }

    pub fn identity(l: usize) -> Self {
        SPermC {
            l,
            values: (0..=2 * l + 1).collect(),
        }
    }

    /// `f(j) = 2l+1-j`.
    pub fn reversal(l: usize) -> Self {
        SPermC {
            l,
            values: (0..=2 * l + 1).rev().collect(),
        }
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn apply(&self, j: usize) -> usize {
        self.values[j]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn satisfies_constraint(&self) -> bool {
        let top = 2 * self.l + 1;
        (0..=top).all(|j| self.values[j] + self.values[top - j] == top)
    }

    /// `(self o other)(j) = self(other(j))`.
    pub fn compose(&self, other: &SPermC) -> Result<SPermC> {
        if self.l != other.l {
            return Err(Error::Domain(format!(
                "cannot compose l={} with l={}",
                self.l, other.l
            )));
        }
        Ok(SPermC {
            l: self.l,
            values: other.values.iter().map(|&j| self.values[j]).collect(),
        })
    }

    /// `f_{i_0} o f_{i_1} o ..` for a word in the simple generators.
    pub fn from_word(l: usize, word: &[usize]) -> Result<SPermC> {
        let mut f = SPermC::identity(l);
        for &i in word {
            f = f.compose(&sc_simple(i, l)?)?;
        }
        Ok(f)
    }
}

impl fmt::Display for SPermC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Simple generator `f_i`, `0 <= i <= l`: swaps `i <-> i+1` and
/// `2l-i <-> 2l+1-i`; for `i = l` the two swaps coincide.
pub fn sc_simple(i: usize, l: usize) -> Result<SPermC> {
    if i > l {
        return Err(Error::Domain(format!(
            "simple generator index {i} outside 0..={l}"
        )));
    }
    let mut values: Vec<usize> = (0..=2 * l + 1).collect();
    values.swap(i, i + 1);
    if i < l {
        values.swap(2 * l - i, 2 * l + 1 - i);
    }
    Ok(SPermC { l, values })
}

/// Head or tail set of a C^t algebra as `(is_head, i0, l0)`.
fn head_or_tail(spec: AlgebraSpec, set: &ConsecutiveSet) -> Result<(bool, usize, usize)> {
    if spec.family != Family::AffineCt {
        return Err(Error::Domain("needs an affine C^t algebra".into()));
    }
    if set.is_wrap() || !set.is_proper(spec.size()) {
        return Err(Error::Domain(format!(
            "{set} is not a proper consecutive set"
        )));
    }
    if set.start() == 1 {
        Ok((true, 1, set.l()))
    } else if set.end() == spec.size() {
        Ok((false, set.start(), set.l()))
    } else {
        Err(Error::Domain(format!(
            "{set} is interior; only head and tail sets are allowed"
        )))
    }
}

/// Generator index matching `f_i` on a head or tail set: `l0+1-i` for
/// heads and `i + i0` for tails.
pub fn mapped_generator(spec: AlgebraSpec, set: &ConsecutiveSet, i: usize) -> Result<usize> {
    let (head, i0, l0) = head_or_tail(spec, set)?;
    if i > l0 {
        return Err(Error::Domain(format!(
            "simple generator index {i} outside 0..={l0}"
        )));
    }
    Ok(if head { l0 + 1 - i } else { i + i0 })
}

/// `sigma_f` on a head or tail set.
///
/// With `mu-bar_i = mu_i - 1/2 sum_t k_it sigma_t` and its extension
/// `mu-hat_r` to `r = 1..2l0+1` (heads: `mu-bar_{l0+2-r}` then `mu-bar_{r-l0}`;
/// tails: `mu-bar_{r+i0-1}` then `mu-bar_{2l0+1+i0-r}`), entries in `J` are
/// `sigma_i + 2 sum_{j=0}^{top} (Mhat(f(j)) - Mhat(j))` where `Mhat` are
/// prefix sums of `mu-hat` and `top` is `l0+1-i` for heads, `i-i0` for tails.
pub fn sigma_f_ct(v: &MassVector, f: &SPermC, set: &ConsecutiveSet) -> Result<MassVector> {
    let spec = v.spec();
    let (head, i0, l0) = head_or_tail(spec, set)?;
    if f.l() != l0 {
        return Err(Error::Domain(format!(
            "permutation has l={} but the set has l0={l0}",
            f.l()
        )));
    }
    let bar = mu_star(v);
    let hat: Vec<LinForm> = (1..=2 * l0 + 1)
        .map(|r| {
            let idx = match (head, r <= l0 + 1) {
                (true, true) => l0 + 2 - r,
                (true, false) => r - l0,
                (false, true) => r + i0 - 1,
                (false, false) => 2 * l0 + 1 + i0 - r,
            };
            bar[idx - 1].clone()
        })
        .collect();
    let p = prefix_sums(&hat);
    let two = rat(2);
    let mut out = v.clone();
    for i in set.elements().iter().copied() {
        let top = if head { l0 + 1 - i } else { i - i0 };
        let mut e = v.get(i).clone();
        for j in 0..=top {
            e.add_scaled(&p[f.apply(j)], &two);
            e.add_scaled(&p[j], &-two.clone());
        }
        out.set(i, e);
    }
    Ok(out)
}

/// Fold any sequence indexed by `1..=n+1` to `1..=2n`: `w_i = v_i` for
/// `i <= n+1` and `w_i = v_{2n+2-i}` beyond.
pub fn fold_sequence<T: Clone>(xs: &[T]) -> Vec<T> {
    let n = xs.len() - 1;
    (1..=2 * n)
        .map(|i| {
            if i <= n + 1 {
                xs[i - 1].clone()
            } else {
                xs[2 * n + 2 - i - 1].clone()
            }
        })
        .collect()
}

/// Folded vector over type A of rank `2n-1`.
pub fn fold_ct_to_a(v: &MassVector) -> Result<MassVector> {
    let spec = v.spec();
    if spec.family != Family::AffineCt {
        return Err(Error::Domain(
            "folding starts from an affine C^t vector".into(),
        ));
    }
    MassVector::new(
        AlgebraSpec::affine_a(2 * spec.n - 1)?,
        fold_sequence(v.entries()),
    )
}

/// Weights matching a folded vector: `(mu_1..mu_{n+1}, mu_n..mu_2)`.
pub fn folded_weights(ct: AlgebraSpec) -> Vec<LinForm> {
    fold_sequence(&crate::weyl::standard_weights(ct))
}

/// Inverse of [`fold_ct_to_a`]; the input must satisfy `w_i = w_{2n+2-i}`.
pub fn unfold_a_to_ct(w: &MassVector) -> Result<MassVector> {
    let spec = w.spec();
    if spec.family != Family::AffineA || spec.n.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "{spec} is not the target of a fold (needs odd type A rank)"
        )));
    }
    let n = spec.n.div_ceil(2);
    for i in n + 2..=2 * n {
        if w.get(i) != w.get(2 * n + 2 - i) {
            return Err(Error::Symmetry(format!(
                "entry {i} ({}) differs from entry {} ({})",
                w.get(i),
                2 * n + 2 - i,
                w.get(2 * n + 2 - i)
            )));
        }
    }
    MassVector::new(AlgebraSpec::affine_ct(n)?, w.entries()[..=n].to_vec())
}

/// Type A generators matching `R_i` of C^t after folding: `R_i R_{2n+2-i}`
/// for `2 <= i <= n`, a single generator for `i = 1` and `i = n+1`.
pub fn folded_generator_word(i: usize, n: usize) -> Word {
    if i == 1 || i == n + 1 {
        Word::new(vec![i])
    } else {
        Word::new(vec![i, 2 * n + 2 - i])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::closed_form_ct;
    use crate::weyl::{apply_generator, apply_word_weighted};

    #[test]
    fn rotation_examples() {
        let a2 = AlgebraSpec::affine_a(2).unwrap();
        let v = MassVector::new(
            a2,
            vec![
                LinForm::mu_scaled(1, rat(2)),
                LinForm::zero(),
                LinForm::zero(),
            ],
        )
        .unwrap();
        let id = CyclicRotation::new(1, 3).unwrap();
        assert_eq!(rotate_vector(&v, &id).unwrap(), v);
        let r2 = CyclicRotation::new(2, 3).unwrap();
        assert_eq!((1..=3).map(|i| r2.map(i)).collect::<Vec<_>>(), [2, 3, 1]);
        let out = rotate_vector(&v, &r2).unwrap();
        assert_eq!(out.get(3), &LinForm::mu_scaled(1, rat(2)));
        assert!(out.get(1).is_zero() && out.get(2).is_zero());
        assert_eq!(rotate_vector(&out, &r2.inverse()).unwrap(), v);
        let ct = MassVector::zero(AlgebraSpec::affine_ct(2).unwrap());
        assert!(matches!(rotate_vector(&ct, &r2), Err(Error::Domain(_))));
    }

    #[test]
    fn covariance_example() {
        let a2 = AlgebraSpec::affine_a(2).unwrap();
        let r2 = CyclicRotation::new(2, 3).unwrap();
        assert_eq!(
            rotation_covariance(&Word::new(vec![1]), &r2),
            Word::new(vec![3])
        );
        assert!(check_rotation_covariance(&Word::new(vec![1]), &r2, a2).unwrap());
        let id = CyclicRotation::new(1, 3).unwrap();
        assert_eq!(
            rotation_covariance(&Word::new(vec![1, 2]), &id),
            Word::new(vec![1, 2])
        );
    }

    #[test]
    fn finite_a_mass_examples() {
        let w2: Vec<LinForm> = (1..=2).map(LinForm::mu).collect();
        let zero = finite_a_mass(&FinitePermutation::identity(2), &w2).unwrap();
        assert!(zero.iter().all(LinForm::is_zero));
        let one = finite_a_mass(&FinitePermutation::reverse(1), &w2[..1]).unwrap();
        assert_eq!(one, vec![LinForm::mu_scaled(1, rat(2))]);
        let rev = finite_a_mass(&FinitePermutation::reverse(2), &w2).unwrap();
        let top = &LinForm::mu_scaled(1, rat(2)) + &LinForm::mu_scaled(2, rat(2));
        assert_eq!(rev, vec![top.clone(), top]);
        assert!(FinitePermutation::new(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn simple_generators() {
        assert_eq!(sc_simple(0, 1).unwrap().values(), &[1, 0, 3, 2]);
        assert_eq!(sc_simple(1, 1).unwrap().values(), &[0, 2, 1, 3]);
        for l in 0..5 {
            for i in 0..=l {
                let f = sc_simple(i, l).unwrap();
                assert!(f.satisfies_constraint());
                assert_eq!(f.compose(&f).unwrap(), SPermC::identity(l));
            }
        }
        assert!(sc_simple(3, 2).is_err());
        assert!(SPermC::new(1, vec![1, 0, 2, 3]).is_err());
    }

    #[test]
    fn sigma_f_examples() {
        let c2 = AlgebraSpec::affine_ct(2).unwrap();
        let tail = ConsecutiveSet::new(2, 1, 3).unwrap();
        let g = MassVector::generic(c2);
        assert_eq!(sigma_f_ct(&g, &SPermC::identity(1), &tail).unwrap(), g);
        let z = MassVector::zero(c2);
        assert_eq!(
            sigma_f_ct(&z, &SPermC::reversal(1), &tail).unwrap(),
            closed_form_ct(&z, &tail).unwrap()
        );
        let interior = ConsecutiveSet::new(2, 1, 5).unwrap();
        let c4 = AlgebraSpec::affine_ct(4).unwrap();
        assert!(matches!(
            sigma_f_ct(&MassVector::zero(c4), &SPermC::identity(1), &interior),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn fold_examples() {
        let c2 = AlgebraSpec::affine_ct(2).unwrap();
        let g = MassVector::generic(c2);
        let f = fold_ct_to_a(&g).unwrap();
        assert_eq!(f.spec(), AlgebraSpec::affine_a(3).unwrap());
        assert_eq!(
            f.entries(),
            &[LinForm::s(1), LinForm::s(2), LinForm::s(3), LinForm::s(2)]
        );
        assert!(fold_ct_to_a(&MassVector::zero(c2)).unwrap().is_zero());
        assert_eq!(unfold_a_to_ct(&f).unwrap(), g);
        let asym = MassVector::generic(AlgebraSpec::affine_a(3).unwrap());
        assert!(matches!(unfold_a_to_ct(&asym), Err(Error::Symmetry(_))));
    }

    #[test]
    fn folding_intertwines_generators() {
        for n in 2..=4 {
            let c = AlgebraSpec::affine_ct(n).unwrap();
            let g = MassVector::generic(c);
            let w = folded_weights(c);
            for i in 1..=n + 1 {
                let left = fold_ct_to_a(&apply_generator(i, &g).unwrap()).unwrap();
                let right = apply_word_weighted(
                    &folded_generator_word(i, n),
                    &fold_ct_to_a(&g).unwrap(),
                    &w,
                )
                .unwrap();
                assert_eq!(left, right, "n={n} i={i}");
            }
        }
    }
}
