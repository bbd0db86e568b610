//! One-species networks via the arrow diagram.

use std::fmt;

use serde_json::{json, Value};

use super::{CaseLabel, ClassifyError, Context, Range, Verdict, VerdictBuilder};
use crate::network::Network;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Arrow {
    Right,
    Left,
    Both,
}

impl Arrow {
    pub fn symbol(self) -> &'static str {
        match self {
            Arrow::Right => "->",
            Arrow::Left => "<-",
            Arrow::Both => "<->",
        }
    }

    fn allows(self, d: Arrow) -> bool {
        self == Arrow::Both || self == d
    }
}

fn flip(d: Arrow) -> Arrow {
    match d {
        Arrow::Right => Arrow::Left,
        Arrow::Left => Arrow::Right,
        Arrow::Both => Arrow::Both,
    }
}

/// Reactant levels in increasing order with the direction of the reactions
/// leaving each level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowDiagram {
    pub levels: Vec<u32>,
    pub arrows: Vec<Arrow>,
    /// Reaction indices per level.
    pub reactions: Vec<Vec<usize>>,
}

impl ArrowDiagram {
    pub fn all_both(&self) -> bool {
        self.arrows.iter().all(|&a| a == Arrow::Both)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "levels": self.levels,
            "arrows": self.arrows.iter().map(|a| a.symbol()).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for ArrowDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.levels.iter().zip(&self.arrows).map(|(l, a)| format!("{}:{}", l, a.symbol())).collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub fn arrow_diagram(net: &Network) -> Result<ArrowDiagram, ClassifyError> {
    if net.num_species() != 1 {
        return Err(ClassifyError::WrongShape(format!("expected one species, found {}", net.num_species())));
    }
    let mut levels: Vec<u32> = net.reactions().iter().map(|r| r.reactant.get(0)).collect();
    levels.sort_unstable();
    levels.dedup();
    let mut arrows = Vec::with_capacity(levels.len());
    let mut reactions = Vec::with_capacity(levels.len());
    for &l in &levels {
        let ks: Vec<usize> = (0..net.num_reactions()).filter(|&k| net.reactions()[k].reactant.get(0) == l).collect();
        let up = ks.iter().any(|&k| net.reactions()[k].product.get(0) > l);
        let down = ks.iter().any(|&k| net.reactions()[k].product.get(0) < l);
        arrows.push(match (up, down) {
            (true, true) => Arrow::Both,
            (true, false) => Arrow::Right,
            _ => Arrow::Left,
        });
        reactions.push(ks);
    }
    Ok(ArrowDiagram { levels, arrows, reactions })
}

/// Longest alternating choice of reactions at increasing reactant levels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingWitness {
    /// Number of alternations; one less than the number of reactions.
    pub t: usize,
    /// Best alternation count when the first arrow points right (left).
    pub t_right: Option<usize>,
    pub t_left: Option<usize>,
    pub leading: Arrow,
    /// Reactions of the maximal subnetwork, by increasing level.
    pub reactions: Vec<usize>,
}

impl AlternatingWitness {
    /// Guaranteed count of stable steady states from alternations.
    pub fn stable_lower_bound(&self) -> u64 {
        let r = self.t_right.map_or(0, |t| t.div_ceil(2));
        let l = self.t_left.map_or(0, |t| t / 2);
        r.max(l) as u64
    }
}

fn reaction_in_direction(net: &Network, ks: &[usize], level: u32, d: Arrow) -> usize {
    *ks.iter()
        .find(|&&k| {
            let p = net.reactions()[k].product.get(0);
            if d == Arrow::Right { p > level } else { p < level }
        })
        .expect("arrow diagram promised a reaction in this direction")
}

pub fn max_alternating(net: &Network) -> Result<AlternatingWitness, ClassifyError> {
    let diag = arrow_diagram(net)?;
    let n = diag.levels.len();
    let dirs = [Arrow::Right, Arrow::Left];
    // best[i][d]: longest alternating run starting at level i with direction d
    let mut best = vec![[0usize; 2]; n];
    let mut next = vec![[None::<usize>; 2]; n];
    for i in (0..n).rev() {
        for (di, &d) in dirs.iter().enumerate() {
            if !diag.arrows[i].allows(d) {
                continue;
            }
            let oi = 1 - di;
            let mut len = 1;
            for j in i + 1..n {
                if best[j][oi] + 1 > len {
                    len = best[j][oi] + 1;
                    next[i][di] = Some(j);
                }
            }
            best[i][di] = len;
        }
    }
    let lead_len = |di: usize| (0..n).map(|i| best[i][di]).max().filter(|&l| l > 0);
    let t_right = lead_len(0).map(|l| l - 1);
    let t_left = lead_len(1).map(|l| l - 1);
    let di = if t_right >= t_left { 0 } else { 1 };
    let start = (0..n).find(|&i| best[i][di] == lead_len(di).unwrap()).unwrap();
    let mut reactions = Vec::new();
    let (mut i, mut d) = (Some(start), di);
    while let Some(l) = i {
        reactions.push(reaction_in_direction(net, &diag.reactions[l], diag.levels[l], dirs[d]));
        i = next[l][d];
        d = 1 - d;
    }
    Ok(AlternatingWitness {
        t: reactions.len() - 1,
        t_right,
        t_left,
        leading: dirs[di],
        reactions,
    })
}

pub(crate) fn classify_one_species_ctx(ctx: &Context) -> VerdictBuilder {
    let diag = arrow_diagram(ctx.net).expect("dispatcher checked the shape");
    let alt = max_alternating(ctx.net).expect("dispatcher checked the shape");
    let t = alt.t as u64;
    let pss = if diag.all_both() { Range::infinite() } else { Range::exact(t) };
    let stable = if t == 0 { Range::exact(0) } else { Range::at_least(alt.stable_lower_bound()) };
    VerdictBuilder::new(CaseLabel::OneSpecies).with(pss, Range::exact(t), stable).cite(
        "arrow-diagram",
        json!({
            "diagram": diag.to_json(),
            "max_alternations": alt.t,
            "alternations_leading_right": alt.t_right,
            "alternations_leading_left": alt.t_left,
            "alternating_subnetwork": alt.reactions.iter().map(|&k| ctx.net.reaction_to_string(k)).collect::<Vec<_>>(),
        }),
    )
}

pub fn classify_one_species(net: &Network) -> Result<Verdict, ClassifyError> {
    if net.num_species() != 1 {
        return Err(ClassifyError::WrongShape(format!("expected one species, found {}", net.num_species())));
    }
    Ok(super::classify(net))
}

/// Whether the arrow diagram of a one-species network alternates at every
/// level, with one reaction per level: the shape of a T-alternating network.
pub fn is_alternating_network(net: &Network) -> bool {
    let Ok(diag) = arrow_diagram(net) else {
        return false;
    };
    diag.levels.len() == net.num_reactions()
        && diag.arrows.iter().all(|&a| a != Arrow::Both)
        && diag.arrows.windows(2).all(|w| w[1] == flip(w[0]))
}
