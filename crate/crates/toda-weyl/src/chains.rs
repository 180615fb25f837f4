//! Set-chain words, their closed-form targets and full blow-up steps.
//!
//! For a type A set `J = {j..j+l}` the chain is built recursively:
//!
//! | `l`  | word                                                         | length |
//! |------|--------------------------------------------------------------|--------|
//! | 0    | `R_j`                                                        | 1      |
//! | 1    | `R_j R_{j+1} R_j`                                            | 3      |
//! | >= 2 | `R_{J*} (R_{j+1} .. R_{j+l} R_{j+l-2} .. R_j)^2`             | `(l+1)(l+2)/2` |
//!
//! with `J* = {j+2..j+l-2}` (empty for `l < 4`). Type C^t head and tail sets
//! use `(R_{j+l} .. R_j)^{l+1}` and `(R_j .. R_{j+l})^{l+1}`; interior sets
//! reuse the type A chain.

use std::fmt;
use std::str::FromStr;

use num::{One, Zero};

use crate::algebra::{rat, ratio, AlgebraSpec, Family, LinForm, MassVector, Rational};
use crate::cartan::{affine_entry, inverse_submatrix, CartanMatrix, ConsecutiveSet};
use crate::error::{Error, Result};
use crate::weyl::Word;

/// A chain word together with the set it was built for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainPlan {
    pub set: ConsecutiveSet,
    pub word: Word,
    pub family: Family,
}

/// Chain on `{j..j+l}` (no wrap).
fn standard_chain(j: usize, l: usize) -> Vec<usize> {
    match l {
        0 => vec![j],
        1 => vec![j, j + 1, j],
        _ => {
            let mut out = if l >= 4 {
                standard_chain(j + 2, l - 4)
            } else {
                Vec::new()
            };
            let mut half: Vec<usize> = (j + 1..=j + l).collect();
            half.extend((j..=j + l - 2).rev());
            out.extend_from_slice(&half);
            out.extend_from_slice(&half);
            out
        }
    }
}

fn require_proper(set: &ConsecutiveSet, spec: AlgebraSpec) -> Result<()> {
    if !set.is_proper(spec.size()) {
        return Err(Error::Domain(format!(
            "{set} is not a proper subset of 1..={}",
            spec.size()
        )));
    }
    Ok(())
}

/// Type A chain word. Wrap sets `{s_1..s_m}` get the chain on `{1..m}`
/// with every letter `t` renamed to `s_t`.
pub fn chain_word_a(set: &ConsecutiveSet, spec: AlgebraSpec) -> Result<ChainPlan> {
    if spec.family != Family::AffineA {
        return Err(Error::Domain(
            "chain_word_a needs an affine A algebra".into(),
        ));
    }
    require_proper(set, spec)?;
    let word = if set.is_wrap() {
        let s = set.elements();
        Word::new(standard_chain(1, set.l())).relabel(|t| s[t - 1])
    } else {
        Word::new(standard_chain(set.start(), set.l()))
    };
    Ok(ChainPlan {
        set: set.clone(),
        word,
        family: Family::AffineA,
    })
}

/// Type C^t chain word: head sets (containing 1), tail sets (containing
/// `n+1`) and interior sets.
pub fn chain_word_ct(set: &ConsecutiveSet, spec: AlgebraSpec) -> Result<ChainPlan> {
    if spec.family != Family::AffineCt {
        return Err(Error::Domain(
            "chain_word_ct needs an affine C^t algebra".into(),
        ));
    }
    if set.is_wrap() {
        return Err(Error::Domain(
            "wrap-around sets only exist in type A".into(),
        ));
    }
    require_proper(set, spec)?;
    let (j, l) = (set.start(), set.l());
    let word = if j == 1 {
        Word::new((j..=j + l).rev().collect()).pow(l + 1)
    } else if j + l == spec.size() {
        Word::new((j..=j + l).collect()).pow(l + 1)
    } else {
        Word::new(standard_chain(j, l))
    };
    Ok(ChainPlan {
        set: set.clone(),
        word,
        family: Family::AffineCt,
    })
}

/// Chain word for either family.
pub fn chain_word(set: &ConsecutiveSet, spec: AlgebraSpec) -> Result<ChainPlan> {
    match spec.family {
        Family::AffineA => chain_word_a(set, spec),
        Family::AffineCt => chain_word_ct(set, spec),
    }
}

/// `mu*_s = mu_s - 1/2 sum_t k_st sigma_t`.
pub fn mu_star(v: &MassVector) -> Vec<LinForm> {
    let spec = v.spec();
    let half = ratio(-1, 2);
    spec.indices()
        .map(|s| {
            let mut f = LinForm::mu(s);
            for t in spec.indices() {
                let k = affine_entry(spec.family, spec.size(), s, t);
                if k != 0 {
                    f.add_scaled(v.get(t), &(&half * rat(k)));
                }
            }
            f
        })
        .collect()
}

/// Closed form of the type A chain:
/// `sigma*_s = sigma_s + 2 sum_{t in J} k^{st} (mu*_t + mu*_{t*})` where `k^{st}`
/// inverts the principal submatrix and `t*` mirrors `t` inside `J`.
///
/// Also accepts interior sets of type C^t, where the ambient matrix is the
/// C^t one.
pub fn closed_form_a(v: &MassVector, set: &ConsecutiveSet) -> Result<MassVector> {
    let spec = v.spec();
    require_proper(set, spec)?;
    if spec.family == Family::AffineCt
        && (set.is_wrap() || set.contains(1) || set.contains(spec.size()))
    {
        return Err(Error::Domain(format!(
            "{set} is not an interior set of the C^t index set"
        )));
    }
    let m = CartanMatrix::affine(spec.family, spec.n)?;
    let inv = inverse_submatrix(&m, set)?;
    let star = mu_star(v);
    let elems = set.elements();
    let len = elems.len();
    let mut out = v.clone();
    for p in 1..=len {
        let mut e = v.get(elems[p - 1]).clone();
        for q in 1..=len {
            let c = inv.get(p, q) * rat(2);
            if c.is_zero() {
                continue;
            }
            e.add_scaled(&star[elems[q - 1] - 1], &c);
            e.add_scaled(&star[elems[len - q] - 1], &c);
        }
        out.set(elems[p - 1], e);
    }
    Ok(out)
}

/// Closed form of the type C^t head and tail chains, written as explicit
/// sums over the weights.
///
/// Head `J = {1..l+1}`, `s in J`:
/// `2(l+2-s) sum_{t=1}^{l+1} mu_t + 2 sum_{q=0}^{l+1-s} sum_{t=l+2}^{2l+1-q} mu_{t-l}
///  - 2 sum_{q=0}^{l+1-s} sum_{t=1}^{q} mu_{l+2-t} - sigma_s + 2 sigma_{l+2}`.
///
/// Tail `J = {i..n+1}`, `l = n+1-i`, `s in J`:
/// `2 sum_{q=0}^{s-i} [ sum_{t=1}^{l+1} mu_{t+i-1} + sum_{t=l+2}^{2l+1-q} mu_{2l+i+1-t}
///  - sum_{t=1}^{q} mu_{t+i-1} ] - sigma_s + 2 sigma_{i-1}`.
pub fn closed_form_ct(v: &MassVector, set: &ConsecutiveSet) -> Result<MassVector> {
    let spec = v.spec();
    if spec.family != Family::AffineCt {
        return Err(Error::Domain(
            "closed_form_ct needs an affine C^t algebra".into(),
        ));
    }
    require_proper(set, spec)?;
    if set.is_wrap() {
        return Err(Error::Domain(
            "wrap-around sets only exist in type A".into(),
        ));
    }
    let size = spec.size();
    let l = set.l();
    let two = rat(2);
    let mut out = v.clone();
    if set.start() == 1 {
        for s in 1..=l + 1 {
            let mut e = LinForm::zero();
            let c1 = rat(2 * (l + 2 - s) as i64);
            for t in 1..=l + 1 {
                e.add_scaled(&LinForm::mu(t), &c1);
            }
            for q in 0..=l + 1 - s {
                for t in l + 2..=2 * l + 1 - q {
                    e.add_scaled(&LinForm::mu(t - l), &two);
                }
                for t in 1..=q {
                    e.add_scaled(&LinForm::mu(l + 2 - t), &-two.clone());
                }
            }
            e.add_scaled(v.get(s), &-Rational::one());
            e.add_scaled(v.get(l + 2), &two);
            out.set(s, e);
        }
    } else if set.end() == size {
        let i = set.start();
        for s in i..=size {
            let mut e = LinForm::zero();
            for q in 0..=s - i {
                for t in 1..=l + 1 {
                    e.add_scaled(&LinForm::mu(t + i - 1), &two);
                }
                for t in l + 2..=2 * l + 1 - q {
                    e.add_scaled(&LinForm::mu(2 * l + i + 1 - t), &two);
                }
                for t in 1..=q {
                    e.add_scaled(&LinForm::mu(t + i - 1), &-two.clone());
                }
            }
            e.add_scaled(v.get(s), &-Rational::one());
            e.add_scaled(v.get(i - 1), &two);
            out.set(s, e);
        }
    } else {
        return Err(Error::Domain(format!(
            "{set} is interior; interior sets use the type A closed form"
        )));
    }
    Ok(out)
}

/// Closed form matching [`chain_word`] for either family.
pub fn closed_form(v: &MassVector, set: &ConsecutiveSet) -> Result<MassVector> {
    let spec = v.spec();
    match spec.family {
        Family::AffineCt if set.contains(1) || set.contains(spec.size()) => closed_form_ct(v, set),
        _ => closed_form_a(v, set),
    }
}

/// Which alternative of the index splitting a decomposition follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    AI,
    AII,
    CtI,
    CtII,
    CtIII,
    CtIV,
}

impl CaseTag {
    pub fn family(self) -> Family {
        match self {
            CaseTag::AI | CaseTag::AII => Family::AffineA,
            _ => Family::AffineCt,
        }
    }

    pub fn all(family: Family) -> &'static [CaseTag] {
        match family {
            Family::AffineA => &[CaseTag::AI, CaseTag::AII],
            Family::AffineCt => &[CaseTag::CtI, CaseTag::CtII, CaseTag::CtIII, CaseTag::CtIV],
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::AI => "A-I",
            CaseTag::AII => "A-II",
            CaseTag::CtI => "Ct-I",
            CaseTag::CtII => "Ct-II",
            CaseTag::CtIII => "Ct-III",
            CaseTag::CtIV => "Ct-IV",
        })
    }
}

impl FromStr for CaseTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let all = [
            CaseTag::AI,
            CaseTag::AII,
            CaseTag::CtI,
            CaseTag::CtII,
            CaseTag::CtIII,
            CaseTag::CtIV,
        ];
        all.into_iter()
            .find(|c| c.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown case tag {s:?}")))
    }
}

/// Splitting `I = J_0 u .. u J_k u N` into maximal blocks and the null set,
/// validated against the clauses of its case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    spec: AlgebraSpec,
    case: CaseTag,
    blocks: Vec<ConsecutiveSet>,
    null_set: Vec<usize>,
}

fn violation(case: CaseTag, clause: &str, detail: String) -> Error {
    Error::Decomposition {
        clause: format!("{case} {clause}"),
        detail,
    }
}

impl Decomposition {
    /// Build and validate; the error names the first violated clause.
    pub fn new(spec: AlgebraSpec, case: CaseTag, blocks: Vec<ConsecutiveSet>) -> Result<Self> {
        let mut d = Decomposition {
            spec,
            case,
            blocks,
            null_set: Vec::new(),
        };
        d.null_set = spec
            .indices()
            .filter(|i| !d.blocks.iter().any(|b| b.contains(*i)))
            .collect();
        d.validate()?;
        Ok(d)
    }

    /// Find the case whose clauses the blocks satisfy.
    pub fn classify(spec: AlgebraSpec, blocks: Vec<ConsecutiveSet>) -> Result<Self> {
        let mut first_err = None;
        for &case in CaseTag::all(spec.family) {
            match Self::new(spec, case, blocks.clone()) {
                Ok(d) => return Ok(d),
                Err(e) => {
                    first_err.get_or_insert(e);
                }
            }
        }
        Err(first_err.expect("every family has at least one case"))
    }

    pub fn spec(&self) -> AlgebraSpec {
        self.spec
    }

    pub fn case(&self) -> CaseTag {
        self.case
    }

    pub fn blocks(&self) -> &[ConsecutiveSet] {
        &self.blocks
    }

    pub fn null_set(&self) -> &[usize] {
        &self.null_set
    }

    fn in_null(&self, i: usize) -> bool {
        self.null_set.contains(&i)
    }

    /// Neighbours of a block that maximality requires to lie in `N`.
    fn boundary(&self, b: &ConsecutiveSet) -> Vec<usize> {
        let size = self.spec.size();
        let (first, last) = (b.start(), b.end());
        match self.spec.family {
            Family::AffineA => {
                let before = if first == 1 { size } else { first - 1 };
                let after = if last == size { 1 } else { last + 1 };
                vec![before, after]
            }
            Family::AffineCt => {
                let mut out = Vec::new();
                if first > 1 {
                    out.push(first - 1);
                }
                if last < size {
                    out.push(last + 1);
                }
                out
            }
        }
    }

    fn validate(&self) -> Result<()> {
        let case = self.case;
        let spec = self.spec;
        let size = spec.size();
        let n = spec.n;
        if case.family() != spec.family {
            return Err(violation(
                case,
                "family",
                format!("case does not apply to {spec}"),
            ));
        }
        if self.blocks.is_empty() {
            return Err(violation(
                case,
                "blocks",
                "at least one block is required".into(),
            ));
        }
        for b in &self.blocks {
            if !b.is_proper(size) {
                return Err(violation(
                    case,
                    "blocks",
                    format!("{b} is not a proper subset of 1..={size}"),
                ));
            }
        }
        for (x, a) in self.blocks.iter().enumerate() {
            for b in &self.blocks[x + 1..] {
                if let Some(i) = a.elements().iter().find(|i| b.contains(**i)) {
                    return Err(violation(
                        case,
                        "disjoint",
                        format!("{a} and {b} share index {i}"),
                    ));
                }
            }
        }
        if self.null_set.is_empty() {
            return Err(violation(
                case,
                "N nonempty",
                "the blocks cover every index".into(),
            ));
        }
        for b in &self.blocks {
            if let Some(i) = self.boundary(b).into_iter().find(|i| !self.in_null(*i)) {
                return Err(violation(
                    case,
                    "maximal",
                    format!("{b} is not maximal: neighbour {i} lies in another block"),
                ));
            }
        }
        let meets = |set: &[usize]| set.iter().any(|i| self.in_null(*i));
        let wraps: Vec<usize> = self
            .blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| b.is_wrap())
            .map(|(k, _)| k)
            .collect();
        let is_head = |b: &ConsecutiveSet| !b.is_wrap() && b.start() == 1;
        let is_tail = |b: &ConsecutiveSet| !b.is_wrap() && b.end() == size;
        match case {
            CaseTag::AI => {
                if !meets(&[1, size]) {
                    return Err(violation(
                        case,
                        "boundary",
                        format!("N must contain 1 or {size}"),
                    ));
                }
                if !wraps.is_empty() {
                    return Err(violation(
                        case,
                        "wrap",
                        "wrap-around blocks belong to case A-II".into(),
                    ));
                }
            }
            CaseTag::AII => {
                if meets(&[1, size]) {
                    return Err(violation(
                        case,
                        "boundary",
                        format!("N must avoid both 1 and {size}"),
                    ));
                }
                if wraps != [0] {
                    return Err(violation(
                        case,
                        "wrap",
                        "exactly one wrap-around block is required and it must come first".into(),
                    ));
                }
            }
            CaseTag::CtI => {
                if meets(&[1, 2]) || !meets(&[n, size]) {
                    return Err(violation(
                        case,
                        "boundary",
                        format!("needs {{1,2}} outside N and {{{n},{size}}} meeting N"),
                    ));
                }
                if !is_head(&self.blocks[0]) {
                    return Err(violation(
                        case,
                        "order",
                        "the first block must be the head block".into(),
                    ));
                }
            }
            CaseTag::CtII => {
                if !meets(&[1, 2]) || meets(&[n, size]) {
                    return Err(violation(
                        case,
                        "boundary",
                        format!("needs {{1,2}} meeting N and {{{n},{size}}} outside N"),
                    ));
                }
                if !is_tail(&self.blocks[0]) {
                    return Err(violation(
                        case,
                        "order",
                        "the first block must be the tail block".into(),
                    ));
                }
            }
            CaseTag::CtIII => {
                if n < 4 {
                    return Err(violation(case, "rank", format!("needs n >= 4, got {n}")));
                }
                if meets(&[1, 2]) || meets(&[n, size]) {
                    return Err(violation(
                        case,
                        "boundary",
                        format!("needs both {{1,2}} and {{{n},{size}}} outside N"),
                    ));
                }
                let last = self.blocks.last().expect("blocks are nonempty");
                if !is_head(&self.blocks[0]) || !is_tail(last) || self.blocks.len() < 2 {
                    return Err(violation(
                        case,
                        "order",
                        "the first block must be the head block and the last the tail block".into(),
                    ));
                }
            }
            CaseTag::CtIV => {
                if !meets(&[1, 2]) || !meets(&[n, size]) {
                    return Err(violation(
                        case,
                        "boundary",
                        format!("needs both {{1,2}} and {{{n},{size}}} meeting N"),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Concatenated chain word of the blocks in listing order.
    pub fn word(&self) -> Result<Word> {
        let mut w = Word::identity();
        for b in &self.blocks {
            w = w.concat(&chain_word(b, self.spec)?.word);
        }
        Ok(w)
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self.blocks.iter().map(|b| b.to_string()).collect();
        let null: Vec<String> = self.null_set.iter().map(|i| i.to_string()).collect();
        write!(
            f,
            "{} blocks [{}] N={{{}}}",
            self.case,
            blocks.join(", "),
            null.join(",")
        )
    }
}

/// One blow-up step: the concatenated chain word of `d` and the vector
/// obtained from the blockwise closed forms.
pub fn blowup_step(v: &MassVector, d: &Decomposition) -> Result<(Word, MassVector)> {
    if v.spec() != d.spec() {
        return Err(Error::Domain(format!(
            "vector over {} but decomposition over {}",
            v.spec(),
            d.spec()
        )));
    }
    let word = d.word()?;
    // blocks are separated by N, so their updates commute; apply the
    // rightmost block first to mirror the word
    let mut out = v.clone();
    for b in d.blocks().iter().rev() {
        out = closed_form(&out, b)?;
    }
    Ok((word, out))
}

/// Length `(l+1)(l+2)/2` of a type A chain on `l+1` indices.
pub fn chain_length_a(len: usize) -> usize {
    len * (len + 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::apply_word;

    fn set(j: usize, l: usize, spec: AlgebraSpec) -> ConsecutiveSet {
        ConsecutiveSet::new(j, l, spec.size()).unwrap()
    }

    #[test]
    fn table_of_type_a_chains() {
        let a6 = AlgebraSpec::affine_a(6).unwrap();
        assert_eq!(
            chain_word_a(&set(3, 0, a6), a6).unwrap().word,
            Word::new(vec![3])
        );
        assert_eq!(
            chain_word_a(&set(2, 1, a6), a6).unwrap().word,
            Word::new(vec![2, 3, 2])
        );
        assert_eq!(
            chain_word_a(&set(1, 2, a6), a6).unwrap().word,
            Word::new(vec![2, 3, 1, 2, 3, 1])
        );
        assert_eq!(
            chain_word_a(&set(1, 3, a6), a6).unwrap().word,
            Word::new(vec![2, 3, 4, 2, 1, 2, 3, 4, 2, 1])
        );
        let lens: Vec<usize> = (0..6)
            .map(|l| chain_word_a(&set(1, l, a6), a6).unwrap().word.len())
            .collect();
        assert_eq!(lens, [1, 3, 6, 10, 15, 21]);
        assert!(matches!(
            chain_word_a(&set(1, 6, a6), a6),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn type_ct_chain_shapes() {
        let c4 = AlgebraSpec::affine_ct(4).unwrap();
        assert_eq!(
            chain_word_ct(&set(1, 1, c4), c4).unwrap().word,
            Word::new(vec![2, 1]).pow(2)
        );
        assert_eq!(
            chain_word_ct(&set(4, 1, c4), c4).unwrap().word,
            Word::new(vec![4, 5]).pow(2)
        );
        assert_eq!(
            chain_word_ct(&set(2, 1, c4), c4).unwrap().word,
            Word::new(vec![2, 3, 2])
        );
        assert_eq!(chain_word_ct(&set(1, 2, c4), c4).unwrap().word.len(), 9);
    }

    #[test]
    fn mu_star_examples() {
        let a2 = AlgebraSpec::affine_a(2).unwrap();
        let z = mu_star(&MassVector::zero(a2));
        assert_eq!(z, vec![LinForm::mu(1), LinForm::mu(2), LinForm::mu(3)]);
        let v = MassVector::new(
            a2,
            vec![
                LinForm::mu_scaled(1, rat(2)),
                LinForm::zero(),
                LinForm::zero(),
            ],
        )
        .unwrap();
        let st = mu_star(&v);
        assert_eq!(st[0], -LinForm::mu(1));
        assert_eq!(st[1], &LinForm::mu(2) + &LinForm::mu(1));
        assert_eq!(st[2], &LinForm::mu(3) + &LinForm::mu(1));
    }

    #[test]
    fn closed_form_examples() {
        let a3 = AlgebraSpec::affine_a(3).unwrap();
        let z = MassVector::zero(a3);
        let v = closed_form_a(&z, &set(1, 0, a3)).unwrap();
        assert_eq!(v.get(1), &LinForm::mu_scaled(1, rat(2)));
        let v = closed_form_a(&z, &set(1, 1, a3)).unwrap();
        let top = &LinForm::mu_scaled(1, rat(2)) + &LinForm::mu_scaled(2, rat(2));
        assert_eq!(v.get(1), &top);
        assert_eq!(v.get(2), &top);
        assert_eq!(v, apply_word(&Word::new(vec![1, 2, 1]), &z).unwrap());
    }

    #[test]
    fn ct_closed_form_examples() {
        let c2 = AlgebraSpec::affine_ct(2).unwrap();
        let z = MassVector::zero(c2);
        let tail = closed_form_ct(&z, &set(2, 1, c2)).unwrap();
        let expect = MassVector::new(
            c2,
            vec![
                LinForm::zero(),
                &LinForm::mu_scaled(2, rat(4)) + &LinForm::mu_scaled(3, rat(2)),
                &LinForm::mu_scaled(2, rat(4)) + &LinForm::mu_scaled(3, rat(4)),
            ],
        )
        .unwrap();
        assert_eq!(tail, expect);
        assert_eq!(tail, apply_word(&Word::new(vec![2, 3]).pow(2), &z).unwrap());
        let head = closed_form_ct(&z, &set(1, 1, c2)).unwrap();
        assert_eq!(head, apply_word(&Word::new(vec![2, 1]).pow(2), &z).unwrap());

        let c4 = AlgebraSpec::affine_ct(4).unwrap();
        assert!(matches!(
            closed_form_ct(&MassVector::zero(c4), &set(2, 1, c4)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn decomposition_examples() {
        let a4 = AlgebraSpec::affine_a(4).unwrap();
        let d = Decomposition::new(a4, CaseTag::AI, vec![set(1, 0, a4)]).unwrap();
        let (w, v) = blowup_step(&MassVector::zero(a4), &d).unwrap();
        assert_eq!(w, Word::new(vec![1]));
        assert_eq!(v, apply_word(&w, &MassVector::zero(a4)).unwrap());

        let j0 = ConsecutiveSet::wrap(4, 1, 5).unwrap();
        let err =
            Decomposition::new(a4, CaseTag::AII, vec![j0.clone(), set(3, 0, a4)]).unwrap_err();
        assert!(
            matches!(&err, Error::Decomposition { clause, .. } if clause == "A-II maximal"),
            "{err}"
        );
        assert!(Decomposition::new(a4, CaseTag::AII, vec![j0]).is_ok());

        let c4 = AlgebraSpec::affine_ct(4).unwrap();
        let d = Decomposition::new(c4, CaseTag::CtIV, vec![set(2, 0, c4), set(4, 0, c4)]).unwrap();
        let (w, v) = blowup_step(&MassVector::zero(c4), &d).unwrap();
        assert_eq!(w, Word::new(vec![2, 4]));
        let expect = MassVector::new(
            c4,
            vec![
                LinForm::zero(),
                LinForm::mu_scaled(2, rat(2)),
                LinForm::zero(),
                LinForm::mu_scaled(4, rat(2)),
                LinForm::zero(),
            ],
        )
        .unwrap();
        assert_eq!(v, expect);
    }

    #[test]
    fn classify_finds_cases() {
        let c5 = AlgebraSpec::affine_ct(5).unwrap();
        let d = Decomposition::classify(c5, vec![set(1, 1, c5), set(5, 1, c5)]).unwrap();
        assert_eq!(d.case(), CaseTag::CtIII);
        let d = Decomposition::classify(c5, vec![set(1, 2, c5)]).unwrap();
        assert_eq!(d.case(), CaseTag::CtI);
        let d = Decomposition::classify(c5, vec![set(3, 3, c5)]).unwrap();
        assert_eq!(d.case(), CaseTag::CtII);
        assert!(Decomposition::classify(c5, vec![set(1, 1, c5), set(2, 1, c5)]).is_err());
    }
}
