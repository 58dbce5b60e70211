//! Node graph, seeding and fixpoint propagation.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::descriptor::{AttributeSet, Profile, SpaceDescriptor, Tri};
use super::formulas::{secat_tilde_bound, tc_ceiling_bound};
use super::interval::{ExtNat, Interval};
use super::kb::KnowledgeBase;
use super::models;
use super::rules::Rule;
use super::{BoundsError, Invariant};
use crate::complex::SimplicialComplex;

/// Nodes further than this from the root get no children of their own.
const MAX_DEPTH: usize = 3;
const MAX_PASSES: usize = 256;
const MAX_STEPS: usize = 100_000;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lower,
    Upper,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
        })
    }
}

/// Why a node is in the graph (the first reason it was added for).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeRole {
    Root,
    Factor,
    Group,
    UniversalCover,
    Square,
    AsphericalPart,
    SimplyConnectedPart,
}

/// Where a candidate bound comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Seed { id: String, citation: String },
    Rule(Rule),
}

impl Source {
    pub fn citation(&self) -> &str {
        match self {
            Source::Seed { citation, .. } => citation,
            Source::Rule(r) => r.citation(),
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Seed { id, .. } => write!(f, "seed:{id}"),
            Source::Rule(r) => write!(f, "{r}"),
        }
    }
}

/// One bound that a rule (evaluated at `anchor`) or a seed asserts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub source: Source,
    pub anchor: usize,
    pub node: usize,
    pub invariant: Invariant,
    pub side: Side,
    pub value: ExtNat,
    pub inputs: String,
}

/// One logged tightening.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derivation {
    pub step: usize,
    pub rule: String,
    pub citation: String,
    /// Node the rule was evaluated at.
    pub anchor: usize,
    pub node: usize,
    pub space: String,
    pub invariant: Invariant,
    pub side: Side,
    pub before: Interval,
    pub after: Interval,
    pub inputs: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Node {
    pub id: usize,
    pub label: String,
    pub descriptor: SpaceDescriptor,
    pub profile: Profile,
    pub role: NodeRole,
    pub depth: usize,
    pub factors: Vec<usize>,
    /// The classifying space of the fundamental group, unless the node is that space.
    pub group: Option<usize>,
    /// The universal cover; may be the node itself.
    pub cover: Option<usize>,
    pub square: Option<usize>,
    /// `(A, Y)` with the node `A × Y`, `A` aspherical and `Y` simply connected.
    pub split: Option<(usize, usize)>,
    pub intervals: [Interval; 10],
    set_by: [[Option<usize>; 2]; 10],
}

impl Node {
    pub fn interval(&self, inv: Invariant) -> Interval {
        self.intervals[inv.index()]
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct InvariantState {
    pub nodes: Vec<Node>,
    pub seeds: Vec<Candidate>,
    pub log: Vec<Derivation>,
    pub notes: Vec<String>,
}

fn key(d: &SpaceDescriptor) -> String {
    serde_json::to_string(d).expect("descriptors serialize")
}

struct Builder {
    nodes: Vec<Node>,
    index: HashMap<String, usize>,
}

impl Builder {
    fn add(&mut self, d: SpaceDescriptor, role: NodeRole, depth: usize) -> Result<usize, BoundsError> {
        let k = key(&d);
        if let Some(&i) = self.index.get(&k) {
            return Ok(i);
        }
        let id = self.nodes.len();
        let profile = d.profile()?;
        self.nodes.push(Node {
            id,
            label: d.label(),
            descriptor: d,
            profile,
            role,
            depth,
            factors: Vec::new(),
            group: None,
            cover: None,
            square: None,
            split: None,
            intervals: [Interval::TOP; 10],
            set_by: [[None; 2]; 10],
        });
        self.index.insert(k, id);
        Ok(id)
    }

    fn expand(&mut self, i: usize) -> Result<(), BoundsError> {
        let d = self.nodes[i].descriptor.clone();
        let p = self.nodes[i].profile.clone();
        let depth = self.nodes[i].depth + 1;
        if let SpaceDescriptor::Product { factors } = &d {
            let mut ids = Vec::new();
            for f in factors {
                ids.push(self.add(f.clone(), NodeRole::Factor, depth)?);
            }
            self.nodes[i].factors = ids.clone();
            let (asph, rest): (Vec<usize>, Vec<usize>) =
                ids.iter().partition(|&&f| self.nodes[f].profile.aspherical.is_yes());
            if !asph.is_empty()
                && !rest.is_empty()
                && rest.iter().all(|&f| self.nodes[f].profile.simply_connected.is_yes())
            {
                let part = |ids: &[usize], nodes: &[Node]| {
                    SpaceDescriptor::Product {
                        factors: ids.iter().map(|&f| nodes[f].descriptor.clone()).collect(),
                    }
                    .normalize()
                };
                let a = part(&asph, &self.nodes);
                let y = part(&rest, &self.nodes);
                let a = self.add(a, NodeRole::AsphericalPart, depth)?;
                let y = self.add(y, NodeRole::SimplyConnectedPart, depth)?;
                self.nodes[i].split = Some((a, y));
            }
        }
        if let Some(g) = &p.group {
            let gd = SpaceDescriptor::group_space(g);
            if key(&gd) != key(&d) {
                self.nodes[i].group = Some(self.add(gd, NodeRole::Group, depth)?);
            }
        }
        if let Some(c) = d.universal_cover() {
            self.nodes[i].cover = Some(if key(&c) == key(&d) {
                i
            } else {
                self.add(c, NodeRole::UniversalCover, depth)?
            });
        }
        if i == 0 {
            let sq = SpaceDescriptor::Product { factors: vec![d.clone(), d.clone()] }.normalize();
            if key(&sq) != key(&d) {
                self.nodes[i].square = Some(self.add(sq, NodeRole::Square, depth)?);
            }
        }
        Ok(())
    }
}

fn seed(
    id: &str,
    citation: String,
    node: usize,
    invariant: Invariant,
    side: Side,
    value: ExtNat,
) -> Candidate {
    Candidate {
        source: Source::Seed { id: id.to_string(), citation },
        anchor: node,
        node,
        invariant,
        side,
        value,
        inputs: String::new(),
    }
}

fn interval_seeds(
    out: &mut Vec<Candidate>,
    id: &str,
    citation: &str,
    node: usize,
    inv: Invariant,
    iv: Interval,
) {
    if iv.lower > ExtNat::ZERO {
        out.push(seed(id, citation.to_string(), node, inv, Side::Lower, iv.lower));
    }
    if iv.upper < ExtNat::Inf {
        out.push(seed(id, citation.to_string(), node, inv, Side::Upper, iv.upper));
    }
}

fn seeds_for(n: &Node, kb: &KnowledgeBase, notes: &mut Vec<String>) -> Vec<Candidate> {
    use Invariant as I;
    let mut out = Vec::new();
    let p = &n.profile;
    interval_seeds(&mut out, "dim", &p.dim_reason, n.id, I::Dim, p.dim);
    interval_seeds(&mut out, "conn", &p.conn_reason, n.id, I::Conn, p.conn);
    if n.descriptor.is_point() {
        for inv in I::ALL {
            if inv != I::Conn && inv != I::Dim {
                out.push(seed(
                    "point",
                    "a point: every invariant vanishes in the normalized convention".into(),
                    n.id,
                    inv,
                    Side::Upper,
                    ExtNat::ZERO,
                ));
            }
        }
        return out;
    }
    if let Some(m) = models::models(&n.descriptor) {
        let l = models::lengths(&m);
        match l.cuplen {
            Some((z2, q)) => {
                let v = ExtNat::Fin(z2.length.max(q.length) as u64);
                let cite = format!(
                    "exhaustive search in H*({}): cup-length {} over Z/2, {} over Q",
                    n.label, z2.length, q.length
                );
                interval_seeds(&mut out, "cuplen", &cite, n.id, I::Cuplen, Interval::new(v, v));
            }
            None => notes.push(format!(
                "cup-length of {} not searched: ring of dimension {} exceeds {}",
                n.label,
                l.dim,
                models::CUPLEN_DIM_CAP
            )),
        }
        match l.zcl {
            Some((z2, q)) => {
                let v = ExtNat::Fin(z2.length.max(q.length) as u64);
                let cite = format!(
                    "exhaustive search in H*({0}) ⊗ H*({0}): zero-divisor cup-length {1} over Z/2, {2} over Q",
                    n.label, z2.length, q.length
                );
                interval_seeds(&mut out, "zcl", &cite, n.id, I::Zcl, Interval::new(v, v));
            }
            None => notes.push(format!(
                "zero-divisor cup-length of {} not searched: ring of dimension {} exceeds {}",
                n.label,
                l.dim,
                models::ZCL_DIM_CAP
            )),
        }
    }
    if p.aspherical.is_yes() {
        if let Some(super::GroupClass::Abstract { tc, .. }) = &p.group {
            interval_seeds(
                &mut out,
                "group",
                "supplied with the group: TC(π) = TC(K(π,1))",
                n.id,
                I::Tc,
                *tc,
            );
        }
    }
    for (r, iv) in kb.lookup(&n.descriptor) {
        let cite = format!("{} ({})", r.citation, r.provenance);
        interval_seeds(&mut out, &format!("kb:{}", r.id), &cite, n.id, r.invariant, iv);
    }
    out
}

impl InvariantState {
    pub fn root(&self) -> &Node {
        &self.nodes[0]
    }

    pub fn interval(&self, node: usize, inv: Invariant) -> Interval {
        self.nodes[node].interval(inv)
    }

    fn tightens(&self, c: &Candidate) -> bool {
        let cur = self.interval(c.node, c.invariant);
        match c.side {
            Side::Lower => c.value > cur.lower,
            Side::Upper => c.value < cur.upper,
        }
    }

    fn describe_setter(&self, node: usize, inv: Invariant, side: Side) -> String {
        match self.nodes[node].set_by[inv.index()][side as usize] {
            Some(step) => {
                let d = &self.log[step];
                if d.inputs.is_empty() {
                    format!("{} at step {} ({})", d.rule, step, d.citation)
                } else {
                    format!("{} at step {} from {}", d.rule, step, d.inputs)
                }
            }
            None => "the default bound".to_string(),
        }
    }

    fn apply(&mut self, c: &Candidate) -> Result<(), BoundsError> {
        let before = self.interval(c.node, c.invariant);
        let mut after = before;
        match c.side {
            Side::Lower => after.lower = c.value,
            Side::Upper => after.upper = c.value,
        }
        if after.is_empty() {
            let this = if c.inputs.is_empty() {
                format!("{} ({})", c.source, c.source.citation())
            } else {
                format!("{} from {}", c.source, c.inputs)
            };
            let (lower_by, upper_by) = match c.side {
                Side::Lower => (this, self.describe_setter(c.node, c.invariant, Side::Upper)),
                Side::Upper => (self.describe_setter(c.node, c.invariant, Side::Lower), this),
            };
            return Err(BoundsError::Conflict {
                node: self.nodes[c.node].label.clone(),
                invariant: c.invariant,
                lower: after.lower,
                lower_by,
                upper: after.upper,
                upper_by,
            });
        }
        let step = self.log.len();
        self.log.push(Derivation {
            step,
            rule: c.source.to_string(),
            citation: c.source.citation().to_string(),
            anchor: c.anchor,
            node: c.node,
            space: self.nodes[c.node].label.clone(),
            invariant: c.invariant,
            side: c.side,
            before,
            after,
            inputs: c.inputs.clone(),
        });
        let n = &mut self.nodes[c.node];
        n.intervals[c.invariant.index()] = after;
        n.set_by[c.invariant.index()][c.side as usize] = Some(step);
        Ok(())
    }

    /// Every candidate bound on `node` at the current state: seeds and all rule evaluations.
    pub fn candidates(&self, node: usize) -> Vec<Candidate> {
        let mut out: Vec<Candidate> = self.seeds.iter().filter(|c| c.node == node).cloned().collect();
        for rule in Rule::ALL {
            for x in 0..self.nodes.len() {
                out.extend(evaluate(rule, self, x).into_iter().filter(|c| c.node == node));
            }
        }
        out
    }

    /// The same graph with every interval reset and an empty log.
    fn cleared(&self) -> InvariantState {
        let mut st = self.clone();
        for n in &mut st.nodes {
            n.intervals = [Interval::TOP; 10];
            n.set_by = [[None; 2]; 10];
        }
        st.log.clear();
        st
    }

    /// Re-applies the derivation log from scratch, checking every step against the seeds
    /// and the rule base, and that the result equals this state.
    pub fn replay(&self) -> Result<(), BoundsError> {
        let mut st = self.cleared();
        for (step, d) in self.log.iter().enumerate() {
            let err = |reason: String| BoundsError::Replay { step, reason };
            let cur = st.interval(d.node, d.invariant);
            if cur != d.before {
                return Err(err(format!("expected {} before, found {cur}", d.before)));
            }
            let value = match d.side {
                Side::Lower => d.after.lower,
                Side::Upper => d.after.upper,
            };
            let matches = |c: &Candidate| {
                c.node == d.node && c.invariant == d.invariant && c.side == d.side && c.value == value
            };
            let cand = if d.rule.starts_with("seed:") {
                self.seeds
                    .iter()
                    .find(|c| c.source.to_string() == d.rule && matches(c))
                    .cloned()
                    .ok_or_else(|| err(format!("no seed {} gives {value}", d.rule)))?
            } else {
                let rule: Rule = d.rule.parse().map_err(err)?;
                let first = evaluate(rule, &st, d.anchor).into_iter().find(|c| st.tightens(c));
                match first {
                    Some(c) if matches(&c) => c,
                    Some(c) => {
                        return Err(err(format!(
                            "{rule} at node {} first tightens {}({}) {} to {}",
                            d.anchor, c.invariant, st.nodes[c.node].label, c.side, c.value
                        )))
                    }
                    None => return Err(err(format!("{rule} tightens nothing at node {}", d.anchor))),
                }
            };
            st.apply(&cand)?;
            if st.log.last() != Some(d) {
                return Err(err("logged entry differs from the recomputed one".into()));
            }
        }
        for (a, b) in st.nodes.iter().zip(&self.nodes) {
            if a.intervals != b.intervals {
                return Err(BoundsError::Replay {
                    step: self.log.len(),
                    reason: format!("final intervals of {} differ", a.label),
                });
            }
        }
        Ok(())
    }

    /// `(node, π node)` pairs with `TC^D(node) < TC^D(π)` certified by the intervals.
    pub fn gaps(&self) -> Vec<(usize, usize)> {
        self.nodes
            .iter()
            .filter_map(|n| {
                let g = n.group?;
                let (x, p) = (n.interval(Invariant::Tcd), self.interval(g, Invariant::Tcd));
                (x.upper < p.lower).then_some((n.id, g))
            })
            .collect()
    }
}

/// Builds the node graph for `d` and applies the built-in knowledge base.
pub fn seed_facts(d: &SpaceDescriptor) -> Result<InvariantState, BoundsError> {
    seed_facts_with(d, &KnowledgeBase::builtin())
}

pub fn seed_facts_with(d: &SpaceDescriptor, kb: &KnowledgeBase) -> Result<InvariantState, BoundsError> {
    d.validate()?;
    let mut b = Builder { nodes: Vec::new(), index: HashMap::new() };
    b.add(d.normalize(), NodeRole::Root, 0)?;
    let mut i = 0;
    while i < b.nodes.len() {
        if b.nodes[i].depth < MAX_DEPTH {
            b.expand(i)?;
        }
        i += 1;
    }
    let mut notes = Vec::new();
    let mut seeds = Vec::new();
    for n in &b.nodes {
        seeds.extend(seeds_for(n, kb, &mut notes));
        if let (Some(_), Some(group)) = (n.group, &n.profile.group) {
            if !group.cd().is_finite() {
                notes.push(format!(
                    "R2 does not apply to {}: cd({group}) = ∞, so there is no finite-dimensional K(π,1)",
                    n.label
                ));
            } else if !n.profile.dim.upper.is_finite() {
                notes.push(format!("R2 does not apply to {}: dimension not bounded", n.label));
            }
        }
        if matches!(n.descriptor, SpaceDescriptor::Skeleton { .. }) && !n.profile.dim.is_singleton() {
            notes.push(format!("{}: only an upper bound on the dimension is known", n.label));
        }
    }
    let mut st = InvariantState { nodes: b.nodes, seeds: seeds.clone(), log: Vec::new(), notes };
    for c in &seeds {
        if st.tightens(c) {
            st.apply(c)?;
        }
    }
    Ok(st)
}

/// Runs the rule base to a fixpoint: rules in [`Rule::ORDER`], each over the nodes from the
/// deepest to the root, re-evaluating after every tightening.
pub fn propagate(mut st: InvariantState) -> Result<InvariantState, BoundsError> {
    let mut steps = 0;
    for _ in 0..MAX_PASSES {
        let mut changed = false;
        for rule in Rule::ORDER {
            for x in (0..st.nodes.len()).rev() {
                while let Some(c) = evaluate(rule, &st, x).into_iter().find(|c| st.tightens(c)) {
                    st.apply(&c)?;
                    changed = true;
                    steps += 1;
                    if steps > MAX_STEPS {
                        return Err(BoundsError::NoFixpoint(MAX_STEPS));
                    }
                }
            }
        }
        if !changed {
            return Ok(st);
        }
    }
    Err(BoundsError::NoFixpoint(MAX_PASSES))
}

/// Seeds and propagates.
pub fn analyze(d: &SpaceDescriptor) -> Result<InvariantState, BoundsError> {
    propagate(seed_facts(d)?)
}

/// Bounds for an explicit complex under the given assertions.
pub fn analyze_complex(
    k: &SimplicialComplex,
    assertions: AttributeSet,
) -> Result<InvariantState, BoundsError> {
    analyze(&SpaceDescriptor::Explicit { complex: k.clone(), assertions })
}

type Term = (usize, Invariant, u64);

struct Ctx<'a> {
    st: &'a InvariantState,
    rule: Rule,
    anchor: usize,
    out: Vec<Candidate>,
}

impl Ctx<'_> {
    fn iv(&self, n: usize, inv: Invariant) -> Interval {
        self.st.interval(n, inv)
    }

    fn show(&self, n: usize, inv: Invariant) -> String {
        format!("{}({}) ∈ {}", inv, self.st.nodes[n].label, self.iv(n, inv))
    }

    fn push(&mut self, node: usize, invariant: Invariant, side: Side, value: ExtNat, inputs: String) {
        self.out.push(Candidate {
            source: Source::Rule(self.rule),
            anchor: self.anchor,
            node,
            invariant,
            side,
            value,
            inputs,
        });
    }

    /// `lhs ≤ Σ coef·rhs + constant`: an upper bound on `lhs` and a lower bound on each term.
    fn le(&mut self, lhs: (usize, Invariant), rhs: &[Term], constant: ExtNat, extra: &str) {
        let mut parts: Vec<String> = rhs.iter().map(|&(n, inv, _)| self.show(n, inv)).collect();
        if !extra.is_empty() {
            parts.push(extra.to_string());
        }
        let inputs = parts.join(", ");
        let upper = rhs
            .iter()
            .fold(constant, |acc, &(n, inv, c)| acc.plus(self.iv(n, inv).upper.times(c)));
        self.push(lhs.0, lhs.1, Side::Upper, upper, inputs);
        let lo = self.iv(lhs.0, lhs.1).lower;
        for (i, &(n, inv, coef)) in rhs.iter().enumerate() {
            let others = rhs
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(constant, |acc, (_, &(m, minv, c))| acc.plus(self.iv(m, minv).upper.times(c)));
            let Some(diff) = lo.minus(others) else { continue };
            let value = match diff {
                ExtNat::Fin(v) => ExtNat::Fin(v.div_ceil(coef)),
                ExtNat::Inf => ExtNat::Inf,
            };
            let mut inputs = vec![self.show(lhs.0, lhs.1)];
            inputs.extend(
                rhs.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &(m, minv, _))| self.show(m, minv)),
            );
            if !extra.is_empty() {
                inputs.push(extra.to_string());
            }
            self.push(n, inv, Side::Lower, value, inputs.join(", "));
        }
    }

    fn eq(&mut self, a: (usize, Invariant), b: (usize, Invariant)) {
        self.le(a, &[(b.0, b.1, 1)], ExtNat::ZERO, "");
        self.le(b, &[(a.0, a.1, 1)], ExtNat::ZERO, "");
    }

    fn at_most(&mut self, t: (usize, Invariant), v: ExtNat, why: String) {
        self.push(t.0, t.1, Side::Upper, v, why);
    }

    fn at_least(&mut self, t: (usize, Invariant), v: ExtNat, why: String) {
        self.push(t.0, t.1, Side::Lower, v, why);
    }
}

/// `⌈(2·dim − k)/(k+1)⌉` at the current state, with `k = max(conn, 1)`.
fn tc_ceiling(st: &InvariantState, x: usize) -> Option<(u64, String)> {
    let dim = st.interval(x, Invariant::Dim).upper.finite()?;
    let conn = st.interval(x, Invariant::Conn).lower;
    match conn {
        ExtNat::Inf => Some((0, format!("dim ≤ {dim}, universal cover contractible"))),
        ExtNat::Fin(c) => {
            let k = c.max(1);
            let v = tc_ceiling_bound(dim as i64, k as i64).ok()?;
            Some((v, format!("dim ≤ {dim}, k = {k}, ⌈(2·{dim} − {k})/({k}+1)⌉ = {v}")))
        }
    }
}

/// `⌈(dim − k)/(k+1)⌉` at the current state, with `k = conn`.
fn secat_ceiling(st: &InvariantState, x: usize) -> Option<(u64, String)> {
    let dim = st.interval(x, Invariant::Dim).upper.finite()?;
    match st.interval(x, Invariant::Conn).lower {
        ExtNat::Inf => Some((0, format!("dim ≤ {dim}, universal cover contractible"))),
        ExtNat::Fin(k) => {
            let v = secat_tilde_bound(dim as i64, k as i64).ok()?;
            Some((v, format!("dim ≤ {dim}, k = {k}, ⌈({dim} − {k})/({k}+1)⌉ = {v}")))
        }
    }
}

/// Candidates produced by `rule` at node `x`. Premises are read from the node profile and
/// current intervals; unknown attributes never fire a rule.
pub fn evaluate(rule: Rule, st: &InvariantState, x: usize) -> Vec<Candidate> {
    use Invariant::*;
    let n = &st.nodes[x];
    let p = &n.profile;
    let mut c = Ctx { st, rule, anchor: x, out: Vec::new() };
    let z = ExtNat::ZERO;
    match rule {
        Rule::R1 => {
            c.le((x, Cat), &[(x, Tc, 1)], z, "");
            if let Some(s) = n.square {
                c.le((x, Tc), &[(s, Cat, 1)], z, "");
            }
        }
        Rule::R2 => {
            if let (Some(g), Some(group)) = (n.group, &p.group) {
                if group.cd().is_finite() && st.interval(x, Dim).upper.is_finite() {
                    c.le((x, Tc), &[(g, Tc, 1), (x, Dim, 1)], z, "");
                }
            }
        }
        Rule::R3 => c.le((x, Tc), &[(x, Tcd, 1), (x, Tctilde, 1)], z, ""),
        Rule::R4 => {
            if let Some((v, why)) = tc_ceiling(st, x) {
                c.le((x, Tc), &[(x, Tcd, 1)], ExtNat::Fin(v), &why);
            }
        }
        Rule::R5 => c.le((x, Tcd), &[(x, Tc, 1)], z, ""),
        Rule::R6 => {
            if p.aspherical.is_yes() {
                c.eq((x, Tcd), (x, Tc));
            }
        }
        Rule::R7 => {
            if let Some(g) = n.group {
                c.le((x, Tcd), &[(g, Tcd, 1)], z, "");
            }
        }
        Rule::R8 => {
            if let (Some(g), Some(group)) = (n.group, &p.group) {
                let conn = st.interval(x, Conn).lower;
                let k = ExtNat::Fin(2).max(conn.plus(ExtNat::Fin(1)));
                if group.cd().is_finite() && group.cd() <= k {
                    c.eq((x, Tcd), (g, Tcd));
                }
            }
        }
        Rule::R9 => {
            c.le((x, Cat1), &[(x, Tcd, 1)], z, "");
            if let Some(s) = n.square {
                c.le((x, Tcd), &[(s, Cat1, 1)], z, "");
            }
        }
        Rule::R10 => {
            if p.h_space.is_yes() {
                c.eq((x, Tcd), (x, Cat1));
            }
        }
        Rule::R11 => {
            if let Some((v, why)) = tc_ceiling(st, x) {
                c.at_most((x, Tctilde), ExtNat::Fin(v), why);
            }
        }
        Rule::R12 => {
            if let Some(u) = n.cover {
                c.le((u, Tc), &[(x, Tctilde, 1)], z, "");
            }
        }
        Rule::R13 => match p.aspherical {
            Tri::Yes => c.at_most((x, Tctilde), z, "aspherical".into()),
            Tri::No => c.at_least((x, Tctilde), ExtNat::Fin(1), "not aspherical".into()),
            Tri::Unknown => {}
        },
        Rule::R14 => {
            if let Some((a, y)) = n.split {
                c.eq((x, Tcd), (a, Tc));
                c.eq((x, Tctilde), (y, Tc));
            }
        }
        Rule::R15 => c.le((x, Zcl), &[(x, Tc, 1)], z, ""),
        Rule::R16 => {
            c.le((x, Cuplen), &[(x, Cat, 1)], z, "");
            c.le((x, Cat), &[(x, Dim, 1)], z, "");
        }
        Rule::R17 => {
            c.le((x, Cat), &[(x, Cat1, 1), (x, Cattilde, 1)], z, "");
            if let Some((v, why)) = secat_ceiling(st, x) {
                c.at_most((x, Cattilde), ExtNat::Fin(v), why);
            }
        }
        Rule::R18 => match p.simply_connected {
            Tri::Yes => c.at_most((x, Tcd), z, "simply connected".into()),
            Tri::No => c.at_least((x, Tcd), ExtNat::Fin(1), "not simply connected".into()),
            Tri::Unknown => {}
        },
        Rule::R19 => {
            if !n.factors.is_empty() {
                let terms: Vec<Term> = n.factors.iter().map(|&f| (f, Tc, 1)).collect();
                c.le((x, Tc), &terms, z, "");
            }
        }
        Rule::R20 => {
            if let Some(r) = p.torus_rank {
                let why = format!("T^{r} × (simply connected)");
                c.at_least((x, Cat1), ExtNat::Fin(r), why.clone());
                c.at_most((x, Cat1), ExtNat::Fin(r), why);
            }
        }
        Rule::R21 => {
            c.le((x, Tc), &[(x, Dim, 2)], z, "");
            if p.aspherical.is_yes() {
                if let Some(g) = &p.group {
                    c.at_least((x, Tcd), g.cd(), format!("cd({g}) = {}", g.cd()));
                }
            }
        }
        Rule::R22 => {
            if matches!(n.descriptor, SpaceDescriptor::RealProjective { .. }) {
                c.eq((x, Tcd), (x, Tc));
            }
        }
    }
    c.out
}

/// Rules that gave the final value of a bound, ties included. Empty for an unconstrained
/// default bound.
pub fn binding(st: &InvariantState, node: usize, inv: Invariant, side: Side) -> Vec<String> {
    let iv = st.interval(node, inv);
    let target = match side {
        Side::Lower => iv.lower,
        Side::Upper => iv.upper,
    };
    st.candidates(node)
        .into_iter()
        .filter(|c| c.invariant == inv && c.side == side && c.value == target)
        .map(|c| c.source.to_string())
        .unique()
        .collect()
}
