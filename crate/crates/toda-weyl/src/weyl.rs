//! Generator action `R_i` on mass vectors, words, presentation relations and
//! Pohozaev residuals.
//!
//! The action replaces entry `i` by `2 mu_i - sum_t k_it sigma_t + sigma_i`
//! and leaves every other entry unchanged.

use std::fmt;

use num::One;

use crate::algebra::{rat, AlgebraSpec, Family, LinForm, MassVector, Quadratic, Rational};
use crate::cartan::affine_entry;
use crate::error::{Error, Result};

/// A word in the generators, written left to right and applied right to
/// left: `[a, b, c]` is `R_a R_b R_c`, so `R_c` acts first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    /// The empty word.
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self` followed by `other` in written order (`other` acts first).
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    /// Word of the inverse element (generators are involutions).
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Rename every letter through `f`.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Word {
        Word(self.0.iter().map(|&i| f(i)).collect())
    }

    pub fn validate(&self, spec: AlgebraSpec) -> Result<()> {
        match self.0.iter().find(|&&i| !spec.contains(i)) {
            Some(bad) => Err(Error::Domain(format!(
                "generator {bad} outside 1..={}",
                spec.size()
            ))),
            None => Ok(()),
        }
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("R{i}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// The standard weights `(mu_1, .., mu_{n+1})`.
pub fn standard_weights(spec: AlgebraSpec) -> Vec<LinForm> {
    spec.indices().map(LinForm::mu).collect()
}

/// `R_i v` with the standard weights.
pub fn apply_generator(i: usize, v: &MassVector) -> Result<MassVector> {
    let spec = v.spec();
    if !spec.contains(i) {
        return Err(Error::Domain(format!(
            "generator {i} outside 1..={}",
            spec.size()
        )));
    }
    let mut out = v.clone();
    out.set(i, reflected_entry(i, v, &LinForm::mu(i)));
    Ok(out)
}

/// `R_i v` where `mu_i` is replaced by the form `weights[i-1]`.
///
/// Needed for rotated and folded weight systems.
pub fn apply_generator_weighted(
    i: usize,
    v: &MassVector,
    weights: &[LinForm],
) -> Result<MassVector> {
    let spec = v.spec();
    if !spec.contains(i) {
        return Err(Error::Domain(format!(
            "generator {i} outside 1..={}",
            spec.size()
        )));
    }
    if weights.len() != spec.size() {
        return Err(Error::Domain(format!(
            "expected {} weights, got {}",
            spec.size(),
            weights.len()
        )));
    }
    let mut out = v.clone();
    out.set(i, reflected_entry(i, v, &weights[i - 1]));
    Ok(out)
}

fn reflected_entry(i: usize, v: &MassVector, weight: &LinForm) -> LinForm {
    let spec = v.spec();
    let size = spec.size();
    let mut e = weight.scale(&rat(2));
    // -k_ii sigma_i + sigma_i = -sigma_i
    e.add_scaled(v.get(i), &-Rational::one());
    for t in spec.indices() {
        if t == i {
            continue;
        }
        let k = affine_entry(spec.family, size, i, t);
        if k != 0 {
            e.add_scaled(v.get(t), &rat(-k));
        }
    }
    e
}

/// Apply `w` right to left.
pub fn apply_word(w: &Word, v: &MassVector) -> Result<MassVector> {
    w.validate(v.spec())?;
    let mut out = v.clone();
    for &i in w.letters().iter().rev() {
        out = apply_generator(i, &out)?;
    }
    Ok(out)
}

pub fn apply_word_weighted(w: &Word, v: &MassVector, weights: &[LinForm]) -> Result<MassVector> {
    w.validate(v.spec())?;
    let mut out = v.clone();
    for &i in w.letters().iter().rev() {
        out = apply_generator_weighted(i, &out, weights)?;
    }
    Ok(out)
}

/// A defining relation `left = right` of the group presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub label: String,
    pub left: Word,
    pub right: Word,
}

impl Relation {
    fn identity(label: String, w: Word) -> Self {
        Relation {
            label,
            left: w,
            right: Word::identity(),
        }
    }

    /// Both sides act identically on the generic vector.
    pub fn holds(&self, spec: AlgebraSpec) -> bool {
        let g = MassVector::generic(spec);
        match (apply_word(&self.left, &g), apply_word(&self.right, &g)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} = {}", self.label, self.left, self.right)
    }
}

/// Every defining relation of the affine Weyl group of `spec`.
pub fn presentation_relations(spec: AlgebraSpec) -> Vec<Relation> {
    let n = spec.n;
    let size = spec.size();
    let mut out = Vec::new();
    for i in 1..=size {
        out.push(Relation::identity(
            format!("(R{i})^2"),
            Word::new(vec![i, i]),
        ));
    }
    match spec.family {
        Family::AffineA => {
            for i in 1..=size {
                for j in i + 1..=size {
                    let d = j - i;
                    let pair = Word::new(vec![i, j]);
                    if d == 1 || d == n {
                        out.push(Relation::identity(format!("(R{i} R{j})^3"), pair.pow(3)));
                        out.push(braid(i, j));
                    } else {
                        out.push(Relation::identity(format!("(R{i} R{j})^2"), pair.pow(2)));
                    }
                }
            }
        }
        Family::AffineCt => {
            for i in 1..=size {
                for j in i + 1..=size {
                    let d = j - i;
                    if d > 1 {
                        out.push(Relation::identity(
                            format!("(R{i} R{j})^2"),
                            Word::new(vec![i, j]).pow(2),
                        ));
                    } else if i >= 2 && j <= n {
                        out.push(braid(i, j));
                    }
                }
            }
            out.push(Relation::identity(
                "(R2 R1)^4".into(),
                Word::new(vec![2, 1]).pow(4),
            ));
            out.push(Relation::identity(
                format!("(R{n} R{size})^4"),
                Word::new(vec![n, size]).pow(4),
            ));
        }
    }
    out
}

fn braid(i: usize, j: usize) -> Relation {
    Relation {
        label: format!("braid R{i} R{j}"),
        left: Word::new(vec![i, j, i]),
        right: Word::new(vec![j, i, j]),
    }
}

/// `w` acts as the identity on the generic vector.
pub fn verify_relation(w: &Word, spec: AlgebraSpec) -> bool {
    let g = MassVector::generic(spec);
    matches!(apply_word(w, &g), Ok(out) if out == g)
}

/// Pohozaev residual of `v` with the standard weights.
///
/// Type A: `sum sigma_i^2 - sum sigma_i sigma_{i+1} - 2 sum mu_i sigma_i`
/// with cyclic `i+1`. Type C^t: `sum_{i<=n} (sigma_i - sigma_{i+1})^2 -
/// 2 (mu_1 sigma_1 + 2 sum_{2<=i<=n} mu_i sigma_i + mu_{n+1} sigma_{n+1})`.
/// The residual vanishes identically exactly when the identity holds for
/// every choice of weights.
pub fn pohozaev_residual(v: &MassVector) -> Result<Quadratic> {
    pohozaev_residual_weighted(v, &standard_weights(v.spec()))
}

pub fn pohozaev_residual_weighted(v: &MassVector, weights: &[LinForm]) -> Result<Quadratic> {
    let spec = v.spec();
    let size = spec.size();
    if weights.len() != size {
        return Err(Error::Domain(format!(
            "expected {size} weights, got {}",
            weights.len()
        )));
    }
    if v.has_s() {
        return Err(Error::Evaluation(
            "residual of a vector with s indeterminates; evaluate the indeterminates first".into(),
        ));
    }
    let mut q = Quadratic::zero();
    let one = Rational::one();
    let mut add = |a: &LinForm, b: &LinForm, c: Rational| -> Result<()> {
        q.add_scaled(&a.product(b)?, &c);
        Ok(())
    };
    match spec.family {
        Family::AffineA => {
            for i in 1..=size {
                let next = i % size + 1;
                add(v.get(i), v.get(i), one.clone())?;
                add(v.get(i), v.get(next), -one.clone())?;
                add(&weights[i - 1], v.get(i), rat(-2))?;
            }
        }
        Family::AffineCt => {
            for i in 1..size {
                let d = v.get(i) - v.get(i + 1);
                add(&d, &d, one.clone())?;
            }
            for i in 1..=size {
                let c = if i == 1 || i == size {
                    rat(-2)
                } else {
                    rat(-4)
                };
                add(&weights[i - 1], v.get(i), c)?;
            }
        }
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_of(spec: AlgebraSpec, entries: Vec<LinForm>) -> MassVector {
        MassVector::new(spec, entries).unwrap()
    }

    fn mu(i: usize, c: i64) -> LinForm {
        LinForm::mu_scaled(i, rat(c))
    }

    #[test]
    fn generator_examples() {
        let a2 = AlgebraSpec::affine_a(2).unwrap();
        let z = MassVector::zero(a2);
        let v = apply_generator(1, &z).unwrap();
        assert_eq!(
            v,
            vec_of(a2, vec![mu(1, 2), LinForm::zero(), LinForm::zero()])
        );
        let v = apply_generator(2, &v).unwrap();
        assert_eq!(
            v,
            vec_of(a2, vec![mu(1, 2), &mu(1, 2) + &mu(2, 2), LinForm::zero()])
        );

        let c2 = AlgebraSpec::affine_ct(2).unwrap();
        let v = vec_of(c2, vec![LinForm::zero(), LinForm::zero(), mu(3, 2)]);
        let out = apply_generator(2, &v).unwrap();
        assert_eq!(
            out,
            vec_of(c2, vec![LinForm::zero(), &mu(2, 2) + &mu(3, 2), mu(3, 2)])
        );

        assert!(matches!(apply_generator(4, &z), Err(Error::Domain(_))));
    }

    #[test]
    fn word_examples() {
        let a2 = AlgebraSpec::affine_a(2).unwrap();
        let g = MassVector::generic(a2);
        assert_eq!(apply_word(&Word::identity(), &g).unwrap(), g);
        for i in 1..=3 {
            assert_eq!(apply_word(&Word::new(vec![i, i]), &g).unwrap(), g);
        }
        let v = apply_word(&Word::new(vec![1, 2, 1]), &MassVector::zero(a2)).unwrap();
        let top = &mu(1, 2) + &mu(2, 2);
        assert_eq!(v, vec_of(a2, vec![top.clone(), top, LinForm::zero()]));
    }

    #[test]
    fn relation_lists() {
        let a2 = AlgebraSpec::affine_a(2).unwrap();
        let rels = presentation_relations(a2);
        // every pair is adjacent on the triangle, so no commuting pairs
        assert_eq!(rels.iter().filter(|r| r.left.len() == 4).count(), 0);

        let a4 = AlgebraSpec::affine_a(4).unwrap();
        assert!(presentation_relations(a4)
            .iter()
            .any(|r| r.left == Word::new(vec![1, 3, 1, 3])));

        let c3 = AlgebraSpec::affine_ct(3).unwrap();
        let rels = presentation_relations(c3);
        assert!(rels.iter().any(|r| r.left == Word::new(vec![2, 1]).pow(4)));
        assert!(rels.iter().any(|r| r.left == Word::new(vec![3, 4]).pow(4)));
    }

    #[test]
    fn relations_hold_for_small_ranks() {
        for n in 2..=4 {
            for spec in [
                AlgebraSpec::affine_a(n).unwrap(),
                AlgebraSpec::affine_ct(n).unwrap(),
            ] {
                for r in presentation_relations(spec) {
                    assert!(r.holds(spec), "{spec}: {r}");
                }
            }
        }
    }

    #[test]
    fn verify_relation_examples() {
        let a3 = AlgebraSpec::affine_a(3).unwrap();
        assert!(verify_relation(&Word::new(vec![1, 1]), a3));
        assert!(verify_relation(&Word::new(vec![1, 3, 1, 3]), a3));
        assert!(!verify_relation(&Word::new(vec![1, 2, 1, 2]), a3));
        assert!(verify_relation(&Word::new(vec![1, 2]).pow(3), a3));
        assert!(!verify_relation(&Word::new(vec![9]), a3));
    }

    #[test]
    fn residual_examples() {
        let a2 = AlgebraSpec::affine_a(2).unwrap();
        assert!(pohozaev_residual(&MassVector::zero(a2)).unwrap().is_zero());
        let v = vec_of(a2, vec![mu(1, 2), &mu(1, 2) + &mu(2, 2), LinForm::zero()]);
        assert!(pohozaev_residual(&v).unwrap().is_zero());
        let v = vec_of(
            a2,
            vec![
                LinForm::constant_form(rat(1)),
                LinForm::zero(),
                LinForm::zero(),
            ],
        );
        let q = pohozaev_residual(&v).unwrap();
        let mut expected = Quadratic::zero();
        expected.add_term(0, 0, rat(1));
        expected.add_term(0, 1, rat(-2));
        assert_eq!(q, expected);
        assert!(matches!(
            pohozaev_residual(&MassVector::generic(a2)),
            Err(Error::Evaluation(_))
        ));
    }

    #[test]
    fn ct_residual_vanishes_on_generators() {
        let c3 = AlgebraSpec::affine_ct(3).unwrap();
        for i in 1..=4 {
            let v = apply_generator(i, &MassVector::zero(c3)).unwrap();
            assert!(pohozaev_residual(&v).unwrap().is_zero(), "R{i}");
        }
    }

    #[test]
    fn word_display() {
        assert_eq!(Word::new(vec![1, 2, 1]).to_string(), "R1 R2 R1");
        assert_eq!(Word::identity().to_string(), "e");
    }
}
