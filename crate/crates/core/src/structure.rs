//! Stoichiometric and graph structure: rank, linkage classes, terminal strong
//! linkage classes, weak reversibility and deficiency.

use serde_json::{json, Value};

use crate::linalg::{columns_to_rows, mat_vec, positive_dependency, rank_int};
use crate::network::Network;
use crate::rational::{fmt_q, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StoichStructure {
    /// `s x r`, column `k` is the reaction vector of reaction `k`.
    pub stoich_matrix: Vec<Vec<i64>>,
    pub subspace_dim: usize,
    /// Complex indices per linkage class, in order of first complex.
    pub linkage_classes: Vec<Vec<usize>>,
    pub terminal_strong_linkage_classes: Vec<Vec<usize>>,
    pub weakly_reversible: bool,
    pub deficiency: usize,
    /// Deficiency of each linkage class taken as its own network.
    pub linkage_deficiencies: Vec<usize>,
}

impl StoichStructure {
    pub fn num_linkage_classes(&self) -> usize {
        self.linkage_classes.len()
    }

    /// Each linkage class has one terminal strong linkage class, each has
    /// deficiency at most one, and they sum to the network deficiency.
    pub fn deficiency_one_hypotheses(&self) -> bool {
        let one_terminal = self.linkage_classes.iter().all(|lc| {
            self.terminal_strong_linkage_classes.iter().filter(|t| lc.contains(&t[0])).count() == 1
        });
        one_terminal
            && self.linkage_deficiencies.iter().all(|&d| d <= 1)
            && self.linkage_deficiencies.iter().sum::<usize>() == self.deficiency
    }

    pub fn to_json(&self) -> Value {
        json!({
            "subspace_dim": self.subspace_dim,
            "linkage_classes": self.linkage_classes.len(),
            "terminal_strong_linkage_classes": self.terminal_strong_linkage_classes.len(),
            "weakly_reversible": self.weakly_reversible,
            "deficiency": self.deficiency,
        })
    }
}

/// Transitive closure of the complex graph; `reach[a][b]` iff a path a -> b
/// of length >= 0 exists.
fn reachability(net: &Network) -> Vec<Vec<bool>> {
    let p = net.num_complexes();
    let mut reach = vec![vec![false; p]; p];
    for (i, row) in reach.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(a, b) in net.reaction_complexes() {
        reach[a][b] = true;
    }
    for k in 0..p {
        for i in 0..p {
            if reach[i][k] {
                for j in 0..p {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    reach
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut c = x;
    while parent[c] != r {
        let n = parent[c];
        parent[c] = r;
        c = n;
    }
    r
}

pub fn stoich_structure(net: &Network) -> StoichStructure {
    let vectors = net.reaction_vectors();
    let stoich_matrix = columns_to_rows(&vectors);
    let subspace_dim = rank_int(&vectors);
    let p = net.num_complexes();

    let mut parent: Vec<usize> = (0..p).collect();
    for &(a, b) in net.reaction_complexes() {
        let ra = find(&mut parent, a);
        let rb = find(&mut parent, b);
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut linkage_classes: Vec<Vec<usize>> = Vec::new();
    let mut root_of_class: Vec<usize> = Vec::new();
    for c in 0..p {
        let r = find(&mut parent, c);
        match root_of_class.iter().position(|&x| x == r) {
            Some(k) => linkage_classes[k].push(c),
            None => {
                root_of_class.push(r);
                linkage_classes.push(vec![c]);
            }
        }
    }

    let reach = reachability(net);
    let mut assigned = vec![false; p];
    let mut terminal = Vec::new();
    for a in 0..p {
        if assigned[a] {
            continue;
        }
        let scc: Vec<usize> = (0..p).filter(|&b| reach[a][b] && reach[b][a]).collect();
        for &b in &scc {
            assigned[b] = true;
        }
        let closed = (0..p).all(|b| !reach[a][b] || scc.contains(&b));
        if closed {
            terminal.push(scc);
        }
    }
    let weakly_reversible = net.reaction_complexes().iter().all(|&(a, b)| reach[b][a]);

    let deficiency = p - linkage_classes.len() - subspace_dim;
    let linkage_deficiencies = linkage_classes
        .iter()
        .map(|lc| {
            let vs: Vec<Vec<i64>> = net
                .reaction_complexes()
                .iter()
                .zip(&vectors)
                .filter(|((a, _), _)| lc.contains(a))
                .map(|(_, v)| v.clone())
                .collect();
            lc.len() - 1 - rank_int(&vs)
        })
        .collect();

    StoichStructure {
        stoich_matrix,
        subspace_dim,
        linkage_classes,
        terminal_strong_linkage_classes: terminal,
        weakly_reversible,
        deficiency,
        linkage_deficiencies,
    }
}

/// Consistency: a strictly positive rational `lambda` with `Gamma lambda = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Consistency {
    pub consistent: bool,
    pub certificate: Option<Vec<Q>>,
}

impl Consistency {
    pub fn to_json(&self) -> Value {
        json!({
            "consistent": self.consistent,
            "lambda": self.certificate.as_ref().map(|l| l.iter().map(fmt_q).collect::<Vec<_>>()),
        })
    }
}

pub fn is_consistent(net: &Network) -> Consistency {
    let vectors = net.reaction_vectors();
    let certificate = positive_dependency(&vectors);
    if let Some(lam) = &certificate {
        let rows = columns_to_rows(&vectors);
        debug_assert!(mat_vec(&rows, lam).iter().all(num_traits::Zero::is_zero));
    }
    Consistency { consistent: certificate.is_some(), certificate }
}
