//! Multistationarity classification for small networks.

pub mod enumerate;
pub mod lifting;
pub mod minimal;
pub mod one_species;
pub mod reversible;
pub mod two_reaction;

use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::network::{Network, Reaction};
use crate::structure::{is_consistent, stoich_structure, Consistency, StoichStructure};

pub use one_species::{arrow_diagram, classify_one_species, max_alternating, AlternatingWitness, Arrow, ArrowDiagram};
pub use reversible::{classify_one_rev_one_irrev, classify_two_rev};
pub use two_reaction::{beta, box_geometry, classify_two_rxn, classify_two_species_two_rxn, BetaVector, BoxForm, BoxGeometry};

/// How many steady states of a kind a network can admit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Capacity {
    Exact(u64),
    AtLeast(u64),
    Infinite,
    Unknown,
}

const INF: u64 = u64::MAX;

/// Closed interval of possible capacity values; `INF` stands for infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Range {
    pub lo: u64,
    pub hi: u64,
}

impl Range {
    pub const UNKNOWN: Range = Range { lo: 0, hi: INF };

    pub fn exact(n: u64) -> Self {
        Range { lo: n, hi: n }
    }

    pub fn at_least(n: u64) -> Self {
        Range { lo: n, hi: INF }
    }

    pub fn at_most(n: u64) -> Self {
        Range { lo: 0, hi: n }
    }

    pub fn infinite() -> Self {
        Range { lo: INF, hi: INF }
    }

    pub fn meet(self, other: Range) -> Range {
        Range { lo: self.lo.max(other.lo), hi: self.hi.min(other.hi) }
    }

    /// `Some(true)` when every value exceeds one, `Some(false)` when none
    /// does.
    pub fn exceeds_one(self) -> Option<bool> {
        if self.lo > 1 {
            Some(true)
        } else if self.hi <= 1 {
            Some(false)
        } else {
            None
        }
    }

    pub fn capacity(self) -> Capacity {
        if self.lo == self.hi {
            if self.lo == INF {
                Capacity::Infinite
            } else {
                Capacity::Exact(self.lo)
            }
        } else if self.lo == 0 {
            Capacity::Unknown
        } else {
            Capacity::AtLeast(self.lo)
        }
    }
}

impl Capacity {
    pub fn range(self) -> Range {
        match self {
            Capacity::Exact(n) => Range::exact(n),
            Capacity::AtLeast(n) => Range::at_least(n),
            Capacity::Infinite => Range::infinite(),
            Capacity::Unknown => Range::UNKNOWN,
        }
    }

    /// `Some(true)` when the capacity certainly exceeds one, `Some(false)`
    /// when it certainly does not.
    pub fn exceeds_one(self) -> Option<bool> {
        self.range().exceeds_one()
    }

    pub fn lower(self) -> u64 {
        self.range().lo
    }

    pub fn to_json(self) -> Value {
        match self {
            Capacity::Exact(n) => json!({"kind": "exact", "value": n}),
            Capacity::AtLeast(n) => json!({"kind": "at_least", "value": n}),
            Capacity::Infinite => json!({"kind": "infinite"}),
            Capacity::Unknown => json!({"kind": "unknown"}),
        }
    }
}

impl fmt::Display for Capacity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Capacity::Exact(n) => write!(f, "{}", n),
            Capacity::AtLeast(n) => write!(f, ">= {}", n),
            Capacity::Infinite => write!(f, "infinite"),
            Capacity::Unknown => write!(f, "unknown"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    Inconsistent,
    Case1,
    Case2A,
    Case2B,
    Case3A,
    Case3B,
    Case3C,
    OneSpecies,
    SingleReaction,
    TwoReactions,
    ReversibleIrreversible,
    TwoReversible,
    OutOfScope,
}

impl CaseLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::Inconsistent => "INCONSISTENT",
            CaseLabel::Case1 => "CASE_1",
            CaseLabel::Case2A => "CASE_2A",
            CaseLabel::Case2B => "CASE_2B",
            CaseLabel::Case3A => "CASE_3A",
            CaseLabel::Case3B => "CASE_3B",
            CaseLabel::Case3C => "CASE_3C",
            CaseLabel::OneSpecies => "ONE_SPECIES",
            CaseLabel::SingleReaction => "SINGLE_REACTION",
            CaseLabel::TwoReactions => "TWO_REACTIONS",
            CaseLabel::ReversibleIrreversible => "REVERSIBLE_IRREVERSIBLE",
            CaseLabel::TwoReversible => "TWO_REVERSIBLE",
            CaseLabel::OutOfScope => "OUT_OF_SCOPE",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One cited criterion with its certificate data.
#[derive(Clone, Debug, PartialEq)]
pub struct Justification {
    pub criterion: &'static str,
    pub data: Value,
}

impl Justification {
    pub fn new(criterion: &'static str, data: Value) -> Self {
        Justification { criterion, data }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub cap_pss: Capacity,
    pub cap_npss: Capacity,
    pub cap_stable: Capacity,
    pub case: CaseLabel,
    pub justification: Vec<Justification>,
    /// Whether two or more exponentially stable steady states are possible.
    pub multistable: Option<bool>,
    ranges: [Range; 3],
}

impl Verdict {
    pub fn multistationary(&self) -> Option<bool> {
        self.ranges[0].exceeds_one()
    }

    pub fn nondegenerately_multistationary(&self) -> Option<bool> {
        // the range keeps upper bounds the capacity form cannot show
        self.ranges[1].exceeds_one()
    }

    pub fn pss_range(&self) -> Range {
        self.ranges[0]
    }

    pub fn npss_range(&self) -> Range {
        self.ranges[1]
    }

    pub fn stable_range(&self) -> Range {
        self.ranges[2]
    }

    pub fn is_out_of_scope(&self) -> bool {
        self.case == CaseLabel::OutOfScope
    }

    pub fn has_criterion(&self, tag: &str) -> bool {
        self.justification.iter().any(|j| j.criterion == tag)
    }

    pub fn to_json(&self) -> Value {
        let tri = |b: Option<bool>| match b {
            Some(b) => json!(b),
            None => json!("unknown"),
        };
        json!({
            "multistationary": tri(self.multistationary()),
            "nondegenerately_multistationary": tri(self.nondegenerately_multistationary()),
            "multistable": tri(self.multistable),
            "cap_pss": capacity_json(self.cap_pss, self.ranges[0]),
            "cap_npss": capacity_json(self.cap_npss, self.ranges[1]),
            "cap_stable": capacity_json(self.cap_stable, self.ranges[2]),
            "case": self.case.as_str(),
            "justification": self.justification.iter()
                .map(|j| json!({"theorem": j.criterion, "data": j.data}))
                .collect::<Vec<_>>(),
        })
    }

    pub fn to_human(&self) -> String {
        let tri = |b: Option<bool>| match b {
            Some(true) => "yes",
            Some(false) => "no",
            None => "unknown",
        };
        let mut s = String::new();
        s.push_str(&format!("case: {}\n", self.case));
        s.push_str(&format!("multistationary: {}\n", tri(self.multistationary())));
        s.push_str(&format!("nondegenerately multistationary: {}\n", tri(self.nondegenerately_multistationary())));
        s.push_str(&format!("multistable: {}\n", tri(self.multistable)));
        s.push_str(&format!("max positive steady states: {}\n", capacity_text(self.cap_pss, self.ranges[0])));
        s.push_str(&format!("max nondegenerate positive steady states: {}\n", capacity_text(self.cap_npss, self.ranges[1])));
        s.push_str(&format!("max stable positive steady states: {}\n", capacity_text(self.cap_stable, self.ranges[2])));
        s.push_str("justification:\n");
        for j in &self.justification {
            s.push_str(&format!("  - {}: {}\n", j.criterion, j.data));
        }
        s
    }
}

/// Unknown capacities still carry a finite upper bound when one is known.
fn capacity_json(c: Capacity, r: Range) -> Value {
    let mut v = c.to_json();
    if c == Capacity::Unknown && r.hi != INF {
        v["at_most"] = json!(r.hi);
    }
    v
}

fn capacity_text(c: Capacity, r: Range) -> String {
    if c == Capacity::Unknown && r.hi != INF {
        format!("at most {}", r.hi)
    } else {
        c.to_string()
    }
}

/// Accumulates bounds for one network; `finish` tightens and freezes them.
#[derive(Clone, Debug)]
pub struct VerdictBuilder {
    pub pss: Range,
    pub npss: Range,
    pub stable: Range,
    pub case: CaseLabel,
    pub justification: Vec<Justification>,
    subspace_dim: Option<usize>,
}

impl VerdictBuilder {
    pub fn new(case: CaseLabel) -> Self {
        VerdictBuilder {
            pss: Range::UNKNOWN,
            npss: Range::UNKNOWN,
            stable: Range::UNKNOWN,
            case,
            justification: Vec::new(),
            subspace_dim: None,
        }
    }

    pub fn with(mut self, pss: Range, npss: Range, stable: Range) -> Self {
        self.pss = self.pss.meet(pss);
        self.npss = self.npss.meet(npss);
        self.stable = self.stable.meet(stable);
        self
    }

    pub fn zero(case: CaseLabel) -> Self {
        Self::new(case).with(Range::exact(0), Range::exact(0), Range::exact(0))
    }

    pub fn cite(mut self, criterion: &'static str, data: Value) -> Self {
        self.justification.push(Justification::new(criterion, data));
        self
    }

    pub fn subspace_dim(mut self, d: usize) -> Self {
        self.subspace_dim = Some(d);
        self
    }

    pub fn finish(self) -> Verdict {
        let VerdictBuilder { mut pss, mut npss, mut stable, case, justification, subspace_dim } = self;
        // stable <= nondegenerate <= all, applied until nothing moves
        loop {
            let before = (pss, npss, stable);
            npss.hi = npss.hi.min(pss.hi);
            stable.hi = stable.hi.min(npss.hi);
            npss.lo = npss.lo.max(stable.lo);
            pss.lo = pss.lo.max(npss.lo);
            // on a line, two steady states cannot both be attracting
            if subspace_dim == Some(1) && pss.hi <= 2 {
                stable.hi = stable.hi.min(1);
            }
            if (pss, npss, stable) == before {
                break;
            }
        }
        for (name, r) in [("pss", pss), ("npss", npss), ("stable", stable)] {
            assert!(r.lo <= r.hi, "contradictory {} bounds [{}, {}] in case {}", name, r.lo, r.hi, case);
        }
        let multistable = if stable.lo >= 2 {
            Some(true)
        } else if stable.hi <= 1 {
            Some(false)
        } else {
            None
        };
        Verdict {
            cap_pss: pss.capacity(),
            cap_npss: npss.capacity(),
            cap_stable: stable.capacity(),
            case,
            justification,
            multistable,
            ranges: [pss, npss, stable],
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("wrong shape: {0}")]
    WrongShape(String),
    #[error("network is not nondegenerately multistationary: {0}")]
    NotMultistationary(String),
}

/// Shapes the classifier decides completely.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    OneSpecies,
    SingleReaction,
    /// Two directed reactions, possibly a reversible pair.
    TwoIrreversible,
    ReversibleIrreversible,
    TwoReversible,
    OutOfScope,
}

impl Shape {
    pub fn as_str(self) -> &'static str {
        match self {
            Shape::OneSpecies => "one-species",
            Shape::SingleReaction => "single-reaction",
            Shape::TwoIrreversible => "two-irrev",
            Shape::ReversibleIrreversible => "rev-irrev",
            Shape::TwoReversible => "two-rev",
            Shape::OutOfScope => "out-of-scope",
        }
    }
}

pub fn detect_shape(net: &Network) -> Shape {
    let r = net.num_reactions();
    let pairs = net.pair_list().len();
    if net.num_species() == 1 {
        Shape::OneSpecies
    } else if r == 1 {
        Shape::SingleReaction
    } else if r == 2 {
        Shape::TwoIrreversible
    } else if r == 3 && pairs == 1 {
        Shape::ReversibleIrreversible
    } else if r == 4 && pairs == 2 {
        Shape::TwoReversible
    } else {
        Shape::OutOfScope
    }
}

/// Everything the classifier computes once per network.
pub struct Context<'a> {
    pub net: &'a Network,
    pub structure: StoichStructure,
    pub consistency: Consistency,
}

impl<'a> Context<'a> {
    pub fn new(net: &'a Network) -> Self {
        Context { net, structure: stoich_structure(net), consistency: is_consistent(net) }
    }
}

fn single_reaction(ctx: &Context) -> VerdictBuilder {
    debug_assert!(!ctx.consistency.consistent);
    VerdictBuilder::zero(CaseLabel::SingleReaction)
        .cite("single-reaction", json!({"reaction": ctx.net.reaction_to_string(0)}))
        .cite("consistency", ctx.consistency.to_json())
}

fn consistency_floor(b: VerdictBuilder, ctx: &Context) -> VerdictBuilder {
    if ctx.consistency.consistent {
        b.with(Range::at_least(1), Range::UNKNOWN, Range::UNKNOWN)
    } else {
        b.with(Range::exact(0), Range::exact(0), Range::exact(0))
    }
}

/// Classifies any network. Networks outside the decided shapes get an
/// `OUT_OF_SCOPE` verdict carrying whatever the general criteria give.
pub fn classify(net: &Network) -> Verdict {
    let ctx = Context::new(net);
    let shape = detect_shape(net);
    let mut b = match shape {
        Shape::OneSpecies => one_species::classify_one_species_ctx(&ctx),
        Shape::SingleReaction => single_reaction(&ctx),
        Shape::TwoIrreversible => {
            let general = two_reaction::classify_two_rxn_ctx(&ctx);
            if net.num_species() == 2 {
                let specific = two_reaction::classify_two_species_two_rxn_ctx(&ctx);
                let (g, s) = (general.clone().finish(), specific.clone().finish());
                assert_eq!(
                    (g.cap_pss, g.cap_npss, g.cap_stable),
                    (s.cap_pss, s.cap_npss, s.cap_stable),
                    "two-species classifier disagrees with the general two-reaction classifier on {}",
                    net
                );
                specific
            } else {
                general
            }
        }
        Shape::ReversibleIrreversible => reversible::classify_one_rev_one_irrev_ctx(&ctx),
        Shape::TwoReversible => reversible::classify_two_rev_ctx(&ctx),
        Shape::OutOfScope => out_of_scope(&ctx),
    };
    b = b.subspace_dim(ctx.structure.subspace_dim);
    b = consistency_floor(b, &ctx);
    b = attested(net, b);
    if ctx.structure.subspace_dim == 1 {
        b = lifting::species_lifting(&ctx, b);
    }
    let verdict = b.finish();
    check_preclusions(&ctx, &verdict, shape);
    verdict
}

/// Deficiency theory must agree with every in-scope verdict.
fn check_preclusions(ctx: &Context, v: &Verdict, shape: Shape) {
    let st = &ctx.structure;
    if shape == Shape::OutOfScope {
        return;
    }
    if st.deficiency == 0 {
        assert_eq!(v.multistationary(), Some(false), "deficiency-zero network classified multistationary: {}", ctx.net);
        if st.weakly_reversible {
            assert!(v.cap_pss.lower() >= 1, "weakly reversible deficiency-zero network without steady states");
        }
    }
    if st.deficiency_one_hypotheses() {
        assert_eq!(v.multistationary(), Some(false), "deficiency-one preclusion violated: {}", ctx.net);
    }
}

fn deficiency_data(st: &StoichStructure) -> Value {
    json!({
        "deficiency": st.deficiency,
        "linkage_classes": st.num_linkage_classes(),
        "linkage_deficiencies": st.linkage_deficiencies,
        "weakly_reversible": st.weakly_reversible,
        "subspace_dim": st.subspace_dim,
    })
}

fn out_of_scope(ctx: &Context) -> VerdictBuilder {
    let st = &ctx.structure;
    let mut b = VerdictBuilder::new(CaseLabel::OutOfScope).cite(
        "scope",
        json!({"species": ctx.net.num_species(), "reactions": ctx.net.num_reactions(),
               "reversible_pairs": ctx.net.pair_list().len()}),
    );
    if !ctx.consistency.consistent {
        return b.cite("consistency", ctx.consistency.to_json());
    }
    if st.deficiency == 0 {
        b = if st.weakly_reversible {
            b.with(Range::exact(1), Range::UNKNOWN, Range::UNKNOWN)
        } else {
            b.with(Range::exact(0), Range::exact(0), Range::exact(0))
        };
        return b.cite("deficiency-zero", deficiency_data(st));
    }
    if st.deficiency_one_hypotheses() {
        b = b.with(Range::at_most(1), Range::UNKNOWN, Range::UNKNOWN).cite("deficiency-one", deficiency_data(st));
    }
    lifting::subnetwork_lifting(ctx, b)
}

/// Multistability facts known for specific networks, matched up to species
/// relabeling.
struct Attestation {
    reactions: &'static [(&'static [u32], &'static [u32])],
    stable: Range,
    note: &'static str,
}

const ATTESTED: &[Attestation] = &[
    Attestation {
        reactions: &[(&[1, 0, 0], &[0, 1, 1]), (&[2, 1, 1], &[3, 0, 0])],
        stable: Range { lo: 2, hi: u64::MAX },
        note: "multistable",
    },
    Attestation {
        reactions: &[(&[1, 0, 1], &[0, 1, 0]), (&[2, 1, 0], &[3, 0, 1])],
        stable: Range { lo: 0, hi: 1 },
        note: "not multistable",
    },
    Attestation {
        reactions: &[(&[1, 0], &[0, 1]), (&[0, 1], &[1, 0]), (&[2, 1], &[3, 0])],
        stable: Range { lo: 2, hi: u64::MAX },
        note: "bistable",
    },
    Attestation {
        reactions: &[(&[1, 0], &[0, 1]), (&[2, 1], &[3, 0]), (&[3, 0], &[2, 1])],
        stable: Range { lo: 0, hi: 1 },
        note: "one stable and one unstable steady state",
    },
];

fn attested(net: &Network, b: VerdictBuilder) -> VerdictBuilder {
    let s = net.num_species();
    if s > 3 {
        return b;
    }
    let key = enumerate::canonical_reactions(net.reactions(), s);
    for a in ATTESTED {
        if a.reactions[0].0.len() != s || a.reactions.len() != net.num_reactions() {
            continue;
        }
        let rs: Vec<Reaction> = a.reactions.iter().map(|(x, y)| Reaction::new(x.to_vec(), y.to_vec())).collect();
        if enumerate::canonical_reactions(&rs, s) == key {
            return b
                .with(Range::UNKNOWN, Range::UNKNOWN, a.stable)
                .cite("attested-stability", json!({"note": a.note}));
        }
    }
    b
}
