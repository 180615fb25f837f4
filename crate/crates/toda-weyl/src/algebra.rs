//! Exact rationals, sparse degree-one forms and mass vectors.
//!
//! A [`LinForm`] lives over the basis `{1, mu_1..mu_{n+1}, s_1..s_{n+1}}`.
//! The `s_i` are generic indeterminates standing for an arbitrary mass
//! vector, so identities can be checked once for all inputs.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary precision rational, always kept in reduced form.
pub type Rational = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `n/d`, reduced.
///
/// # Panics
///
/// Panics if `d` is zero.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical `p/q` rendering (the denominator is always written).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Human rendering: integers without denominator.
pub fn display_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format_rational(r)
    }
}

/// Parse `p` or `p/q`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("malformed rational {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Affine family of the Toda system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "affine_a")]
    AffineA,
    #[serde(rename = "affine_ct")]
    AffineCt,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::AffineA => "affine_a",
            Family::AffineCt => "affine_ct",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Family plus rank parameter `n`; the index set is `I = {1..n+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraSpec {
    pub family: Family,
    pub n: usize,
}

impl AlgebraSpec {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Rank(format!(
                "rank parameter must be at least 2, got {n}"
            )));
        }
        Ok(AlgebraSpec { family, n })
    }

    pub fn affine_a(n: usize) -> Result<Self> {
        Self::new(Family::AffineA, n)
    }

    pub fn affine_ct(n: usize) -> Result<Self> {
        Self::new(Family::AffineCt, n)
    }

    /// Number of indices, `n + 1`.
    pub fn size(&self) -> usize {
        self.n + 1
    }

    pub fn indices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.size()
    }

    pub fn contains(&self, i: usize) -> bool {
        (1..=self.size()).contains(&i)
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={}", self.family, self.n)
    }
}

/// Sparse degree-one form `c + sum a_i mu_i + sum b_i s_i`.
///
/// Zero coefficients are never stored, so structural equality is
/// equality of forms.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LinForm {
    constant: Rational,
    mu: BTreeMap<usize, Rational>,
    s: BTreeMap<usize, Rational>,
}

fn add_into(map: &mut BTreeMap<usize, Rational>, i: usize, c: Rational) {
    if c.is_zero() {
        return;
    }
    match map.entry(i) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl LinForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant_form(c: Rational) -> Self {
        LinForm {
            constant: c,
            ..Self::default()
        }
    }

    /// The weight `mu_i`.
    pub fn mu(i: usize) -> Self {
        Self::mu_scaled(i, Rational::one())
    }

    pub fn mu_scaled(i: usize, c: Rational) -> Self {
        let mut f = Self::zero();
        add_into(&mut f.mu, i, c);
        f
    }

    /// The generic indeterminate `s_i`.
    pub fn s(i: usize) -> Self {
        let mut f = Self::zero();
        add_into(&mut f.s, i, Rational::one());
        f
    }

    pub fn from_parts(
        constant: Rational,
        mu: impl IntoIterator<Item = (usize, Rational)>,
        s: impl IntoIterator<Item = (usize, Rational)>,
    ) -> Self {
        let mut f = Self::constant_form(constant);
        for (i, c) in mu {
            add_into(&mut f.mu, i, c);
        }
        for (i, c) in s {
            add_into(&mut f.s, i, c);
        }
        f
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    pub fn mu_coeff(&self, i: usize) -> Rational {
        self.mu.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn s_coeff(&self, i: usize) -> Rational {
        self.s.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn mu_terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.mu.iter().map(|(i, c)| (*i, c))
    }

    pub fn s_terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.s.iter().map(|(i, c)| (*i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.mu.is_empty() && self.s.is_empty()
    }

    pub fn has_s(&self) -> bool {
        !self.s.is_empty()
    }

    pub fn has_constant(&self) -> bool {
        !self.constant.is_zero()
    }

    /// Largest index appearing in either the `mu` or the `s` part.
    pub fn max_index(&self) -> usize {
        let m = self.mu.keys().next_back().copied().unwrap_or(0);
        let s = self.s.keys().next_back().copied().unwrap_or(0);
        m.max(s)
    }

    /// `self += c * other`, the workhorse of the generator action.
    pub fn add_scaled(&mut self, other: &LinForm, c: &Rational) {
        if c.is_zero() {
            return;
        }
        self.constant += &other.constant * c;
        for (i, a) in &other.mu {
            add_into(&mut self.mu, *i, a * c);
        }
        for (i, a) in &other.s {
            add_into(&mut self.s, *i, a * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> LinForm {
        let mut out = LinForm::zero();
        out.add_scaled(self, c);
        out
    }

    /// Substitute `mu_values[i-1]` for `mu_i` and `s_values[i-1]` for `s_i`.
    pub fn evaluate(
        &self,
        mu_values: &[Rational],
        s_values: Option<&[Rational]>,
    ) -> Result<Rational> {
        let mut acc = self.constant.clone();
        for (i, c) in &self.mu {
            let x = mu_values
                .get(i - 1)
                .ok_or_else(|| Error::Evaluation(format!("no value supplied for mu_{i}")))?;
            acc += c * x;
        }
        if !self.s.is_empty() {
            let s_values = s_values.ok_or_else(|| {
                Error::Evaluation(
                    "form contains s indeterminates but no s values were given".into(),
                )
            })?;
            for (i, c) in &self.s {
                let x = s_values
                    .get(i - 1)
                    .ok_or_else(|| Error::Evaluation(format!("no value supplied for s_{i}")))?;
                acc += c * x;
            }
        }
        Ok(acc)
    }

    /// Replace every `s_i` by the form `subs[i-1]`.
    pub fn substitute_s(&self, subs: &[LinForm]) -> Result<LinForm> {
        let mut out = LinForm::from_parts(self.constant.clone(), self.mu.clone(), []);
        for (i, c) in &self.s {
            let f = subs
                .get(i - 1)
                .ok_or_else(|| Error::Evaluation(format!("no substitution for s_{i}")))?;
            out.add_scaled(f, c);
        }
        Ok(out)
    }

    /// Product of two forms without `s` part, as a quadratic in `mu`.
    pub fn product(&self, other: &LinForm) -> Result<Quadratic> {
        if self.has_s() || other.has_s() {
            return Err(Error::Evaluation(
                "quadratic forms in the s indeterminates are not supported; evaluate first".into(),
            ));
        }
        let mut q = Quadratic::zero();
        let left: Vec<(usize, &Rational)> = std::iter::once((0, &self.constant))
            .chain(self.mu_terms())
            .collect();
        let right: Vec<(usize, &Rational)> = std::iter::once((0, &other.constant))
            .chain(other.mu_terms())
            .collect();
        for (i, a) in &left {
            if a.is_zero() {
                continue;
            }
            for (j, b) in &right {
                if b.is_zero() {
                    continue;
                }
                q.add_term(*i, *j, *a * *b);
            }
        }
        Ok(q)
    }

    /// Deterministic key; coefficients in sorted basis order.
    pub fn canonical_key(&self) -> String {
        let mut out = String::new();
        self.write_key(&mut out);
        out
    }

    fn write_key(&self, out: &mut String) {
        use std::fmt::Write;
        let _ = write!(out, "{}", format_rational(&self.constant));
        for (i, c) in &self.mu {
            let _ = write!(out, ";m{}={}", i, format_rational(c));
        }
        for (i, c) in &self.s {
            let _ = write!(out, ";s{}={}", i, format_rational(c));
        }
    }
}

impl fmt::Display for LinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(Rational, String)> = Vec::new();
        for (i, c) in &self.mu {
            terms.push((c.clone(), format!("mu{i}")));
        }
        for (i, c) in &self.s {
            terms.push((c.clone(), format!("s{i}")));
        }
        if !self.constant.is_zero() {
            terms.push((self.constant.clone(), String::new()));
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (c, name)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if name.is_empty() {
                f.write_str(&display_rational(&abs))?;
            } else if abs.is_one() {
                f.write_str(name)?;
            } else {
                write!(f, "{}*{}", display_rational(&abs), name)?;
            }
        }
        Ok(())
    }
}

impl Add for &LinForm {
    type Output = LinForm;
    fn add(self, rhs: &LinForm) -> LinForm {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl Add for LinForm {
    type Output = LinForm;
    fn add(mut self, rhs: LinForm) -> LinForm {
        self.add_scaled(&rhs, &Rational::one());
        self
    }
}

impl Sub for &LinForm {
    type Output = LinForm;
    fn sub(self, rhs: &LinForm) -> LinForm {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Sub for LinForm {
    type Output = LinForm;
    fn sub(mut self, rhs: LinForm) -> LinForm {
        self.add_scaled(&rhs, &-Rational::one());
        self
    }
}

impl Neg for &LinForm {
    type Output = LinForm;
    fn neg(self) -> LinForm {
        self.scale(&-Rational::one())
    }
}

impl Neg for LinForm {
    type Output = LinForm;
    fn neg(self) -> LinForm {
        -&self
    }
}

impl Mul<&Rational> for &LinForm {
    type Output = LinForm;
    fn mul(self, rhs: &Rational) -> LinForm {
        self.scale(rhs)
    }
}

/// Polynomial of degree at most two in the weights `mu`.
///
/// Monomials are keyed by index pairs `(a, b)` with `a <= b`, where index
/// 0 stands for the constant 1: `(0, 0)` is the constant term, `(0, i)` is
/// `mu_i` and `(i, j)` is `mu_i mu_j`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Quadratic {
    terms: BTreeMap<(usize, usize), Rational>,
}

impl Quadratic {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &Rational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, a: usize, b: usize) -> Rational {
        let key = if a <= b { (a, b) } else { (b, a) };
        self.terms.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, a: usize, b: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = if a <= b { (a, b) } else { (b, a) };
        let entry = self.terms.entry(key).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, other: &Quadratic, c: &Rational) {
        for ((a, b), x) in &other.terms {
            self.add_term(*a, *b, x * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Quadratic {
        let mut out = Quadratic::zero();
        out.add_scaled(self, c);
        out
    }

    /// Numeric value at the given weights.
    pub fn evaluate(&self, mu_values: &[Rational]) -> Result<Rational> {
        let get = |i: usize| -> Result<Rational> {
            if i == 0 {
                return Ok(Rational::one());
            }
            mu_values
                .get(i - 1)
                .cloned()
                .ok_or_else(|| Error::Evaluation(format!("no value supplied for mu_{i}")))
        };
        let mut acc = Rational::zero();
        for ((a, b), c) in &self.terms {
            acc += c * get(*a)? * get(*b)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for Quadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // highest degree first
        let mut ordered: Vec<(&(usize, usize), &Rational)> = self.terms.iter().collect();
        ordered.sort_by_key(|((a, b), _)| (usize::from(*a == 0) + usize::from(*b == 0), *a, *b));
        for (k, ((a, b), c)) in ordered.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono = match (*a, *b) {
                (0, 0) => String::new(),
                (0, j) => format!("mu{j}"),
                (i, j) if i == j => format!("mu{i}^2"),
                (i, j) => format!("mu{i}*mu{j}"),
            };
            if mono.is_empty() {
                f.write_str(&display_rational(&abs))?;
            } else if abs.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{}*{}", display_rational(&abs), mono)?;
            }
        }
        Ok(())
    }
}

/// A local mass: `n+1` degree-one forms tagged with the algebra.
///
/// Indexing is 1-based, matching `I = {1..n+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MassVector {
    spec: AlgebraSpec,
    entries: Vec<LinForm>,
}

impl MassVector {
    pub fn new(spec: AlgebraSpec, entries: Vec<LinForm>) -> Result<Self> {
        if entries.len() != spec.size() {
            return Err(Error::Domain(format!(
                "{} expects {} entries, got {}",
                spec,
                spec.size(),
                entries.len()
            )));
        }
        Ok(MassVector { spec, entries })
    }

    /// The zero vector, the root of every orbit.
    pub fn zero(spec: AlgebraSpec) -> Self {
        MassVector {
            spec,
            entries: vec![LinForm::zero(); spec.size()],
        }
    }

    /// The vector `(s_1, .., s_{n+1})` of generic indeterminates.
    pub fn generic(spec: AlgebraSpec) -> Self {
        MassVector {
            spec,
            entries: spec.indices().map(LinForm::s).collect(),
        }
    }

    pub fn spec(&self) -> AlgebraSpec {
        self.spec
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry `i` (1-based).
    pub fn get(&self, i: usize) -> &LinForm {
        &self.entries[i - 1]
    }

    pub fn set(&mut self, i: usize, value: LinForm) {
        self.entries[i - 1] = value;
    }

    pub fn entries(&self) -> &[LinForm] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<LinForm> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LinForm::is_zero)
    }

    pub fn has_s(&self) -> bool {
        self.entries.iter().any(LinForm::has_s)
    }

    pub fn evaluate(
        &self,
        mu_values: &[Rational],
        s_values: Option<&[Rational]>,
    ) -> Result<Vec<Rational>> {
        if mu_values.len() != self.spec.size() {
            return Err(Error::Evaluation(format!(
                "expected {} weight values, got {}",
                self.spec.size(),
                mu_values.len()
            )));
        }
        if let Some(s) = s_values {
            if s.len() != self.spec.size() {
                return Err(Error::Evaluation(format!(
                    "expected {} s values, got {}",
                    self.spec.size(),
                    s.len()
                )));
            }
        }
        self.entries
            .iter()
            .map(|e| e.evaluate(mu_values, s_values))
            .collect()
    }

    /// Replace the generic indeterminates by the entries of `v`.
    pub fn substitute_s(&self, v: &MassVector) -> Result<MassVector> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.substitute_s(v.entries()))
            .collect::<Result<Vec<_>>>()?;
        MassVector::new(self.spec, entries)
    }

    /// Deterministic key: entries in index order, coefficients in basis order.
    pub fn canonical_key(&self) -> String {
        let mut out = format!("{}:{}|", self.spec.family.tag(), self.spec.n);
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                out.push('|');
            }
            e.write_key(&mut out);
        }
        out
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(RawVector::from(self)).expect("mass vectors always serialize")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&RawVector::from(self)).expect("mass vectors always serialize")
    }

    /// Parse the JSON form; syntax errors carry line and column.
    pub fn from_json_str(text: &str) -> Result<MassVector> {
        let raw: RawVector = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        raw.into_vector()
    }

    pub fn from_json_value(value: &serde_json::Value) -> Result<MassVector> {
        let raw = RawVector::deserialize(value).map_err(|e| Error::Parse(e.to_string()))?;
        raw.into_vector()
    }
}

impl fmt::Display for MassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// Rational carried as a `"p/q"` string in JSON.
#[derive(Debug, Clone)]
struct RatString(Rational);

impl Serialize for RatString {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for RatString {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text)
            .map(RatString)
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    #[serde(rename = "const", default)]
    constant: Option<RatString>,
    #[serde(default)]
    mu: BTreeMap<usize, RatString>,
    #[serde(default)]
    s: BTreeMap<usize, RatString>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawVector {
    family: Family,
    n: usize,
    entries: Vec<RawEntry>,
}

impl From<&MassVector> for RawVector {
    fn from(v: &MassVector) -> Self {
        let entries = v
            .entries
            .iter()
            .map(|e| RawEntry {
                constant: Some(RatString(e.constant.clone())),
                mu: e
                    .mu
                    .iter()
                    .map(|(i, c)| (*i, RatString(c.clone())))
                    .collect(),
                s: e.s
                    .iter()
                    .map(|(i, c)| (*i, RatString(c.clone())))
                    .collect(),
            })
            .collect();
        RawVector {
            family: v.spec.family,
            n: v.spec.n,
            entries,
        }
    }
}

impl RawVector {
    fn into_vector(self) -> Result<MassVector> {
        let spec = AlgebraSpec::new(self.family, self.n)?;
        if self.entries.len() != spec.size() {
            return Err(Error::Parse(format!(
                "\"entries\" has {} items, expected n+1 = {}",
                self.entries.len(),
                spec.size()
            )));
        }
        let mut entries = Vec::with_capacity(spec.size());
        for (k, raw) in self.entries.into_iter().enumerate() {
            for (part, map) in [("mu", &raw.mu), ("s", &raw.s)] {
                if let Some(bad) = map.keys().find(|i| !spec.contains(**i)) {
                    return Err(Error::Parse(format!(
                        "entries[{k}].{part}: index {bad} outside 1..={}",
                        spec.size()
                    )));
                }
            }
            entries.push(LinForm::from_parts(
                raw.constant.map(|c| c.0).unwrap_or_else(Rational::zero),
                raw.mu.into_iter().map(|(i, c)| (i, c.0)),
                raw.s.into_iter().map(|(i, c)| (i, c.0)),
            ));
        }
        MassVector::new(spec, entries)
    }
}
