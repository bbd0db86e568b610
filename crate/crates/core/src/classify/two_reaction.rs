//! Networks with two reactions: the sign vector of the reactant difference
//! scaled by the reaction vector, and the box picture in two dimensions.

use serde_json::{json, Value};

use super::{CaseLabel, ClassifyError, Context, Range, Verdict, VerdictBuilder};
use crate::linalg::negative_multiple;
use crate::network::Network;
use crate::rational::{fmt_q, Q};

/// Data of a two-reaction network `y -> y'`, `z -> z'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaVector {
    /// Reaction vector `y' - y` of the first reaction.
    pub v: Vec<i64>,
    /// Reaction vector of the second reaction.
    pub w: Vec<i64>,
    /// Reactant difference `z - y`.
    pub d: Vec<i64>,
    /// Componentwise product `v * d`.
    pub beta: Vec<i64>,
    /// `lambda > 0` with `v = -lambda w`, when the network is consistent.
    pub lambda: Option<Q>,
}

impl BetaVector {
    pub fn consistent(&self) -> bool {
        self.lambda.is_some()
    }

    pub fn nonzero(&self) -> Vec<usize> {
        (0..self.beta.len()).filter(|&i| self.beta[i] != 0).collect()
    }

    pub fn mixed(&self) -> bool {
        self.beta.iter().any(|&b| b > 0) && self.beta.iter().any(|&b| b < 0)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "beta": self.beta,
            "reactant_difference": self.d,
            "lambda": self.lambda.as_ref().map(fmt_q),
        })
    }
}

pub fn beta(net: &Network) -> Result<BetaVector, ClassifyError> {
    if net.num_reactions() != 2 {
        return Err(ClassifyError::WrongShape(format!("expected two reactions, found {}", net.num_reactions())));
    }
    let rs = net.reactions();
    let v = rs[0].vector();
    let w = rs[1].vector();
    let d: Vec<i64> = (0..net.num_species()).map(|i| rs[1].reactant.get(i) as i64 - rs[0].reactant.get(i) as i64).collect();
    let beta = v.iter().zip(&d).map(|(a, b)| a * b).collect();
    let lambda = negative_multiple(&v, &w);
    Ok(BetaVector { v, w, d, beta, lambda })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoxForm {
    Zigzag1,
    Zigzag2,
    Zigzag3,
    Zigzag4,
    NoZigzag,
}

impl BoxForm {
    pub fn is_zigzag(self) -> bool {
        self != BoxForm::NoZigzag
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BoxForm::Zigzag1 => "ZIGZAG_1",
            BoxForm::Zigzag2 => "ZIGZAG_2",
            BoxForm::Zigzag3 => "ZIGZAG_3",
            BoxForm::Zigzag4 => "ZIGZAG_4",
            BoxForm::NoZigzag => "NONE",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diagonal {
    Ascending,
    Descending,
}

/// The box spanned by the two reactants in the plane of species `i`
/// (horizontal) and `j` (vertical).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxGeometry {
    pub species: (usize, usize),
    /// Reactant corners `(x_i, x_j)` of the first and second reaction.
    pub corners: [(u32, u32); 2],
    pub diagonal: Diagonal,
    /// Slope of the reactant diagonal, `d_j / d_i`.
    pub diagonal_slope: Q,
    /// Slope of the reaction vectors, `v_j / v_i`; `None` if vertical.
    pub vector_slope: Option<Q>,
    pub form: BoxForm,
}

impl BoxGeometry {
    pub fn slope_minus_one(&self) -> bool {
        self.diagonal_slope == Q::from_integer((-1).into())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "species": [self.species.0, self.species.1],
            "corners": [[self.corners[0].0, self.corners[0].1], [self.corners[1].0, self.corners[1].1]],
            "diagonal": match self.diagonal { Diagonal::Ascending => "ascending", Diagonal::Descending => "descending" },
            "diagonal_slope": fmt_q(&self.diagonal_slope),
            "vector_slope": self.vector_slope.as_ref().map(fmt_q),
            "form": self.form.as_str(),
        })
    }
}

/// `None` when the reactants share a coordinate, so no box exists.
pub fn box_geometry(net: &Network, i: usize, j: usize) -> Option<BoxGeometry> {
    assert_eq!(net.num_reactions(), 2);
    let rs = net.reactions();
    let corner = |k: usize| (rs[k].reactant.get(i), rs[k].reactant.get(j));
    let corners = [corner(0), corner(1)];
    let di = corners[1].0 as i64 - corners[0].0 as i64;
    let dj = corners[1].1 as i64 - corners[0].1 as i64;
    if di == 0 || dj == 0 {
        return None;
    }
    let vecs = [rs[0].vector(), rs[1].vector()];
    let signs = |k: usize| (vecs[k][i].signum(), vecs[k][j].signum());
    let diagonal = if (di > 0) == (dj > 0) { Diagonal::Ascending } else { Diagonal::Descending };
    // the corner with the smaller horizontal coordinate: top-left when
    // descending, bottom-left when ascending
    let left = if corners[0].0 < corners[1].0 { 0 } else { 1 };
    let (l, r) = (signs(left), signs(1 - left));
    let form = match (diagonal, l, r) {
        (Diagonal::Descending, (1, 1), (-1, -1)) => BoxForm::Zigzag1,
        (Diagonal::Descending, (-1, -1), (1, 1)) => BoxForm::Zigzag2,
        (Diagonal::Ascending, (-1, 1), (1, -1)) => BoxForm::Zigzag3,
        (Diagonal::Ascending, (1, -1), (-1, 1)) => BoxForm::Zigzag4,
        _ => BoxForm::NoZigzag,
    };
    let v = &vecs[0];
    Some(BoxGeometry {
        species: (i, j),
        corners,
        diagonal,
        diagonal_slope: Q::new(dj.into(), di.into()),
        vector_slope: (v[i] != 0).then(|| Q::new(v[j].into(), v[i].into())),
        form,
    })
}

/// Stability of the single steady state when every nonzero entry of the
/// sign vector agrees: stable exactly when those entries are positive.
fn sign_rule(b: &BetaVector) -> Range {
    if b.beta.iter().all(|&x| x >= 0) {
        Range::exact(1)
    } else {
        Range::exact(0)
    }
}

fn inconsistent(ctx: &Context, b: &BetaVector, case: CaseLabel) -> VerdictBuilder {
    VerdictBuilder::zero(case)
        .cite("consistency", ctx.consistency.to_json())
        .cite("two-reactions-beta", b.to_json())
}

pub(crate) fn classify_two_species_two_rxn_ctx(ctx: &Context) -> VerdictBuilder {
    let b = beta(ctx.net).expect("dispatcher checked the shape");
    if !b.consistent() {
        return inconsistent(ctx, &b, CaseLabel::Inconsistent);
    }
    let nz = b.nonzero();
    let (case, pss, npss, stable) = match nz.len() {
        0 => (CaseLabel::Case1, Range::infinite(), Range::exact(0), Range::exact(0)),
        1 => {
            let zero = 1 - nz[0];
            let case = if b.v[zero] == 0 { CaseLabel::Case2A } else { CaseLabel::Case2B };
            (case, Range::exact(1), Range::exact(1), sign_rule(&b))
        }
        _ if !b.mixed() => (CaseLabel::Case3A, Range::exact(1), Range::exact(1), sign_rule(&b)),
        _ => {
            let g = box_geometry(ctx.net, 0, 1).expect("both reactant differences are nonzero");
            if g.slope_minus_one() {
                (CaseLabel::Case3B, Range::infinite(), Range::exact(1), Range::UNKNOWN)
            } else {
                (CaseLabel::Case3C, Range::exact(2), Range::exact(2), Range::exact(1))
            }
        }
    };
    let mut out = VerdictBuilder::new(case).with(pss, npss, stable).cite("two-species-two-reactions", b.to_json());
    if let Some(g) = box_geometry(ctx.net, 0, 1) {
        // the box picture is an independent route to the same answer
        let box_says = g.form.is_zigzag() && !g.slope_minus_one();
        assert_eq!(box_says, case == CaseLabel::Case3C, "box criterion disagrees with the sign vector on {}", ctx.net);
        out = out.cite("box-diagram", g.to_json());
    } else {
        assert_ne!(case, CaseLabel::Case3C);
    }
    out
}

/// Two reactions and any number of species.
pub(crate) fn classify_two_rxn_ctx(ctx: &Context) -> VerdictBuilder {
    let b = beta(ctx.net).expect("dispatcher checked the shape");
    if !b.consistent() {
        return inconsistent(ctx, &b, CaseLabel::Inconsistent);
    }
    let nz = b.nonzero();
    let case = CaseLabel::TwoReactions;
    let (pss, npss, stable) = if nz.is_empty() {
        (Range::infinite(), Range::exact(0), Range::exact(0))
    } else if !b.mixed() {
        (Range::exact(1), Range::exact(1), sign_rule(&b))
    } else if nz.len() == 2 {
        let (i, j) = (nz[0], nz[1]);
        if b.d[i] == -b.d[j] {
            (Range::infinite(), Range::exact(1), Range::UNKNOWN)
        } else {
            (Range::exact(2), Range::exact(2), Range::exact(1))
        }
    } else {
        (Range::at_least(2), Range::at_least(2), Range::at_least(1))
    };
    let mut data = b.to_json();
    data["relevant_species"] = json!(nz.len());
    VerdictBuilder::new(case).with(pss, npss, stable).cite("two-reactions-beta", data)
}

pub fn classify_two_species_two_rxn(net: &Network) -> Result<Verdict, ClassifyError> {
    if net.num_species() != 2 || net.num_reactions() != 2 {
        return Err(ClassifyError::WrongShape("expected two species and two reactions".into()));
    }
    Ok(super::classify(net))
}

pub fn classify_two_rxn(net: &Network) -> Result<Verdict, ClassifyError> {
    if net.num_reactions() != 2 || net.num_species() < 2 {
        return Err(ClassifyError::WrongShape("expected two reactions over at least two species".into()));
    }
    Ok(super::classify(net))
}

/// Three-species two-reaction networks that are nondegenerately
/// multistationary while every two-species restriction is not: all three
/// sign entries nonzero, mixed, and both opposite-sign pairs have reactant
/// difference slope -1.
pub fn three_species_minimal_form(b: &BetaVector) -> bool {
    if b.beta.len() != 3 || !b.consistent() || b.beta.contains(&0) || !b.mixed() {
        return false;
    }
    let pos = b.beta.iter().filter(|&&x| x > 0).count();
    let odd = if pos == 1 { b.beta.iter().position(|&x| x > 0) } else { b.beta.iter().position(|&x| x < 0) }.unwrap();
    (0..3).filter(|&k| k != odd).all(|k| b.d[k] == -b.d[odd])
}

/// Ratio identity linking the sign vector to the box slopes.
pub fn slope_identity_holds(b: &BetaVector, g: &BoxGeometry) -> bool {
    let (i, j) = g.species;
    match &g.vector_slope {
        Some(gamma) if b.beta[i] != 0 => Q::new(b.beta[j].into(), b.beta[i].into()) == gamma * &g.diagonal_slope,
        _ => true,
    }
}
