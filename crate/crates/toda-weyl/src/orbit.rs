//! Orbit enumeration from the zero vector, coefficient matrices, the
//! Pohozaev plus integrality test and membership certificates by descent.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{display_rational, rat, AlgebraSpec, MassVector, Rational};
use crate::error::{Error, Result};
use crate::weyl::{apply_generator, pohozaev_residual, Word};

/// Default step budget for [`descend_to_zero`].
pub const DEFAULT_MAX_STEPS: usize = 256;

/// An orbit element with a word sending zero to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitNode {
    pub vector: MassVector,
    /// `apply_word(witness, 0) == vector`.
    pub witness: Word,
    /// Length of the shortest witness found by the search.
    pub level: usize,
}

/// Knobs for [`enumerate_with`].
#[derive(Debug, Clone, Copy)]
pub struct EnumerateOptions {
    /// Worker threads for frontier expansion; 0 or 1 runs inline.
    pub workers: usize,
    /// Skip the letter that was just applied (it only leads back).
    pub prune_repeats: bool,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            workers: 1,
            prune_repeats: true,
        }
    }
}

/// All orbit vectors reachable from zero by words of length `<= depth`,
/// in breadth-first discovery order.
pub fn enumerate(spec: AlgebraSpec, depth: usize) -> Vec<OrbitNode> {
    enumerate_with(spec, depth, EnumerateOptions::default())
}

pub fn enumerate_with(spec: AlgebraSpec, depth: usize, opts: EnumerateOptions) -> Vec<OrbitNode> {
    let pool = if opts.workers > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(opts.workers)
                .build()
                .expect("thread pool construction"),
        )
    } else {
        None
    };

    let root = OrbitNode {
        vector: MassVector::zero(spec),
        witness: Word::identity(),
        level: 0,
    };
    let mut seen: HashMap<String, usize> = HashMap::new();
    seen.insert(root.vector.canonical_key(), 0);
    let mut nodes = vec![root];
    let mut frontier: Vec<usize> = vec![0];

    for level in 1..=depth {
        let expand = |&idx: &usize| -> Vec<(String, usize, MassVector)> {
            let node = &nodes[idx];
            let last = node.witness.letters().first().copied();
            spec.indices()
                .filter(|&i| !(opts.prune_repeats && Some(i) == last))
                .map(|i| {
                    let v = apply_generator(i, &node.vector).expect("letters are in range");
                    (v.canonical_key(), i, v)
                })
                .collect()
        };
        // children are computed in parallel but merged in frontier order,
        // so the result does not depend on the worker count
        let batches: Vec<Vec<(String, usize, MassVector)>> = match &pool {
            Some(p) => p.install(|| frontier.par_iter().map(expand).collect()),
            None => frontier.iter().map(expand).collect(),
        };
        let mut next = Vec::new();
        for (&parent, batch) in frontier.iter().zip(batches) {
            for (key, i, vector) in batch {
                if seen.contains_key(&key) {
                    continue;
                }
                let witness = Word::new(vec![i]).concat(&nodes[parent].witness);
                seen.insert(key, nodes.len());
                next.push(nodes.len());
                nodes.push(OrbitNode {
                    vector,
                    witness,
                    level,
                });
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    nodes
}

/// `n_ij` with `sigma_i = 2 sum_j n_ij mu_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientMatrix {
    pub entries: Vec<Vec<Rational>>,
}

impl CoefficientMatrix {
    pub fn is_nonnegative_integral(&self) -> bool {
        self.entries
            .iter()
            .flatten()
            .all(|x| x.is_integer() && !x.is_negative())
    }
}

impl fmt::Display for CoefficientMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(display_rational).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

pub fn coefficient_matrix(v: &MassVector) -> Result<CoefficientMatrix> {
    let size = v.spec().size();
    let half = Rational::new(1.into(), 2.into());
    let mut entries = Vec::with_capacity(size);
    for (k, e) in v.entries().iter().enumerate() {
        if e.has_constant() {
            return Err(Error::NotMassForm(format!(
                "entry {} has constant term {}",
                k + 1,
                e.constant()
            )));
        }
        if e.has_s() {
            return Err(Error::NotMassForm(format!(
                "entry {} has s indeterminates",
                k + 1
            )));
        }
        entries.push((1..=size).map(|j| e.mu_coeff(j) * &half).collect());
    }
    Ok(CoefficientMatrix { entries })
}

/// Outcome of the Pohozaev and integrality checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaNReport {
    pub coeffs_ok: bool,
    pub pohozaev_ok: bool,
}

impl GammaNReport {
    pub fn passes(&self) -> bool {
        self.coeffs_ok && self.pohozaev_ok
    }
}

pub fn gamma_n_test(v: &MassVector) -> Result<GammaNReport> {
    let coeffs_ok = coefficient_matrix(v)?.is_nonnegative_integral();
    let pohozaev_ok = pohozaev_residual(v)?.is_zero();
    Ok(GammaNReport {
        coeffs_ok,
        pohozaev_ok,
    })
}

/// Verdict of a membership check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// A word `w` with `apply_word(w, v) == 0`.
    Member(Word),
    NotInGammaN(String),
    DescentStalled(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipReport {
    pub verdict: Verdict,
    pub pohozaev_ok: bool,
    pub coeffs_ok: bool,
}

impl MembershipReport {
    pub fn is_member(&self) -> bool {
        matches!(self.verdict, Verdict::Member(_))
    }
}

impl fmt::Display for MembershipReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            Verdict::Member(w) => write!(f, "Member: {w} sends the vector to 0")?,
            Verdict::NotInGammaN(why) => write!(f, "NotInGammaN: {why}")?,
            Verdict::DescentStalled(steps) => write!(f, "DescentStalled after {steps} steps")?,
        }
        write!(
            f,
            " (pohozaev_ok={}, coeffs_ok={})",
            self.pohozaev_ok, self.coeffs_ok
        )
    }
}

fn value_at_ones(v: &MassVector, i: usize) -> Rational {
    let e = v.get(i);
    let mut acc = e.constant().clone();
    for (_, c) in e.mu_terms() {
        acc += c;
    }
    acc
}

/// Greedy descent on `Phi = sum sigma_i` at `mu = (1..1)`: apply the
/// smallest generator that lowers `Phi` until the vector is zero.
///
/// A vector failing [`gamma_n_test`] is reported as `NotInGammaN`; running
/// out of decreasing generators or of steps gives `DescentStalled`.
pub fn descend_to_zero(v: &MassVector, max_steps: usize) -> MembershipReport {
    let report = match gamma_n_test(v) {
        Ok(r) => r,
        Err(e) => {
            return MembershipReport {
                verdict: Verdict::NotInGammaN(e.to_string()),
                pohozaev_ok: false,
                coeffs_ok: false,
            }
        }
    };
    let GammaNReport {
        coeffs_ok,
        pohozaev_ok,
    } = report;
    if !(coeffs_ok && pohozaev_ok) {
        let why = match (coeffs_ok, pohozaev_ok) {
            (false, false) => {
                "coefficients are not nonnegative integers and the Pohozaev residual is nonzero"
            }
            (false, true) => "coefficients are not nonnegative integers",
            _ => "the Pohozaev residual is nonzero",
        };
        return MembershipReport {
            verdict: Verdict::NotInGammaN(why.into()),
            pohozaev_ok,
            coeffs_ok,
        };
    }
    let mut cur = v.clone();
    let mut applied = Vec::new();
    let stalled = |steps| MembershipReport {
        verdict: Verdict::DescentStalled(steps),
        pohozaev_ok,
        coeffs_ok,
    };
    loop {
        if cur.is_zero() {
            applied.reverse();
            return MembershipReport {
                verdict: Verdict::Member(Word::new(applied)),
                pohozaev_ok,
                coeffs_ok,
            };
        }
        if applied.len() >= max_steps {
            return stalled(applied.len());
        }
        // only entry i changes, so Phi drops exactly when entry i drops
        let step = cur.spec().indices().find_map(|i| {
            let next = apply_generator(i, &cur).expect("index in range");
            (value_at_ones(&next, i) < value_at_ones(&cur, i)).then_some((i, next))
        });
        match step {
            Some((i, next)) => {
                applied.push(i);
                cur = next;
            }
            None => return stalled(applied.len()),
        }
    }
}

/// Output formats of [`export_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
    Csv,
}

impl FromStr for GraphFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dot" => Ok(GraphFormat::Dot),
            "json" => Ok(GraphFormat::Json),
            "csv" => Ok(GraphFormat::Csv),
            _ => Err(Error::Format(s.to_string())),
        }
    }
}

/// Edges `(from, to, generator)` that go one level up; edges back to the
/// same or a lower level (including the involution back-edges) are left out.
pub fn orbit_edges(nodes: &[OrbitNode]) -> Vec<(usize, usize, usize)> {
    let index: HashMap<String, usize> = nodes
        .iter()
        .enumerate()
        .map(|(k, n)| (n.vector.canonical_key(), k))
        .collect();
    let mut edges = Vec::new();
    for (k, node) in nodes.iter().enumerate() {
        for i in node.vector.spec().indices() {
            let child = apply_generator(i, &node.vector).expect("index in range");
            if let Some(&t) = index.get(&child.canonical_key()) {
                if nodes[t].level == node.level + 1 {
                    edges.push((k, t, i));
                }
            }
        }
    }
    edges
}

#[derive(Serialize)]
struct JsonNode<'a> {
    index: usize,
    level: usize,
    witness: &'a [usize],
    vector: serde_json::Value,
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    family: &'static str,
    n: usize,
    nodes: Vec<JsonNode<'a>>,
    edges: Vec<[usize; 3]>,
}

/// Serialize an enumerated orbit.
///
/// `mu` supplies numeric weights for the CSV table and for DOT labels;
/// without it CSV uses `mu = (1..1)` and DOT prints symbolic vectors.
pub fn export_graph(
    nodes: &[OrbitNode],
    format: GraphFormat,
    mu: Option<&[Rational]>,
) -> Result<Vec<u8>> {
    let Some(first) = nodes.first() else {
        return Err(Error::Domain("nothing to export".into()));
    };
    let spec = first.vector.spec();
    let edges = orbit_edges(nodes);
    match format {
        GraphFormat::Dot => {
            let mut out = String::from("digraph orbit {\n");
            for (k, node) in nodes.iter().enumerate() {
                let label = match mu {
                    Some(m) => node
                        .vector
                        .evaluate(m, None)?
                        .iter()
                        .map(display_rational)
                        .collect::<Vec<_>>()
                        .join(", "),
                    None => node.vector.to_string(),
                };
                out.push_str(&format!(
                    "  n{k} [label=\"{}\"];\n",
                    label.replace('"', "\\\"")
                ));
            }
            for (a, b, i) in &edges {
                out.push_str(&format!("  n{a} -> n{b} [label={i}];\n"));
            }
            out.push_str("}\n");
            Ok(out.into_bytes())
        }
        GraphFormat::Json => {
            let graph = JsonGraph {
                family: spec.family.tag(),
                n: spec.n,
                nodes: nodes
                    .iter()
                    .enumerate()
                    .map(|(k, node)| JsonNode {
                        index: k,
                        level: node.level,
                        witness: node.witness.letters(),
                        vector: node.vector.to_json_value(),
                    })
                    .collect(),
                edges: edges.iter().map(|&(a, b, i)| [a, b, i]).collect(),
            };
            let mut bytes =
                serde_json::to_vec_pretty(&graph).map_err(|e| Error::Format(e.to_string()))?;
            bytes.push(b'\n');
            Ok(bytes)
        }
        GraphFormat::Csv => {
            let ones = vec![Rational::one(); spec.size()];
            let mu = mu.unwrap_or(&ones);
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::Format(e.to_string());
            w.write_record(["index", "mass"]).map_err(io)?;
            for (k, node) in nodes.iter().enumerate() {
                let vals: Vec<String> = node
                    .vector
                    .evaluate(mu, None)?
                    .iter()
                    .map(display_rational)
                    .collect();
                w.write_record([k.to_string(), vals.join(" ")])
                    .map_err(io)?;
            }
            w.into_inner().map_err(|e| Error::Format(e.to_string()))
        }
    }
}

/// Sum of the entries at `mu = (1..1)`; nonnegative on orbit elements.
pub fn phi(v: &MassVector) -> Rational {
    v.spec()
        .indices()
        .map(|i| value_at_ones(v, i))
        .fold(Rational::zero(), |a, b| a + b)
}

/// Integer weights `(1..1)`.
pub fn ones(spec: AlgebraSpec) -> Vec<Rational> {
    vec![rat(1); spec.size()]
}
