//! Box diagrams of two-species, two-reaction networks as SVG.

use std::fmt::Write;

use crate::classify::two_reaction::box_geometry;
use crate::network::Network;
use crate::rational::fmt_q;

/// Pixels per stoichiometric unit.
pub const GRID: i64 = 40;
const MARGIN: i64 = 1;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("box diagrams need two species and two reactions, got {species} species and {reactions} reactions")]
pub struct ShapeError {
    pub species: usize,
    pub reactions: usize,
}

/// Reactants, the box whose diagonal joins them, and both reaction vectors
/// drawn from their reactants. Origin lower left; the first species is
/// horizontal.
pub fn box_diagram_svg(net: &Network) -> Result<String, ShapeError> {
    if net.num_species() != 2 || net.num_reactions() != 2 {
        return Err(ShapeError { species: net.num_species(), reactions: net.num_reactions() });
    }
    let rs = net.reactions();
    let pt = |c: &crate::network::Complex| (c.get(0) as i64, c.get(1) as i64);
    let points: Vec<(i64, i64)> = rs.iter().flat_map(|r| [pt(&r.reactant), pt(&r.product)]).collect();
    let max_x = points.iter().map(|p| p.0).max().unwrap();
    let max_y = points.iter().map(|p| p.1).max().unwrap();
    let (w, h) = ((max_x + 2 * MARGIN) * GRID, (max_y + 2 * MARGIN) * GRID);
    let px = |x: i64| (x + MARGIN) * GRID;
    let py = |y: i64| h - (y + MARGIN) * GRID;

    let mut s = String::new();
    let _ = writeln!(s, r##"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"##);
    let _ = writeln!(
        s,
        r##"<defs><marker id="head" markerWidth="8" markerHeight="8" refX="7" refY="4" orient="auto"><path d="M0,0 L8,4 L0,8 z" fill="black"/></marker></defs>"##
    );
    let _ = writeln!(s, r##"<g stroke="#ddd" stroke-width="1">"##);
    for x in 0..=max_x {
        let _ = writeln!(s, r##"<line x1="{0}" y1="0" x2="{0}" y2="{1}"/>"##, px(x), h);
    }
    for y in 0..=max_y {
        let _ = writeln!(s, r##"<line x1="0" y1="{0}" x2="{1}" y2="{0}"/>"##, py(y), w);
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(
        s,
        r##"<g stroke="black" stroke-width="1"><line x1="{0}" y1="{1}" x2="{2}" y2="{1}"/><line x1="{0}" y1="{1}" x2="{0}" y2="0"/></g>"##,
        px(0),
        py(0),
        w
    );
    let _ = writeln!(s, r##"<text x="{}" y="{}" font-size="12">{}</text>"##, w - GRID / 2, py(0) + 14, net.species()[0]);
    let _ = writeln!(s, r##"<text x="{}" y="{}" font-size="12">{}</text>"##, px(0) - 14, GRID / 2, net.species()[1]);

    let (a, b) = (pt(&rs[0].reactant), pt(&rs[1].reactant));
    let geometry = box_geometry(net, 0, 1);
    if geometry.is_some() {
        let _ = writeln!(
            s,
            r##"<rect class="box" x="{}" y="{}" width="{}" height="{}" fill="#eef" stroke="#88a" stroke-dasharray="4 2"/>"##,
            px(a.0.min(b.0)),
            py(a.1.max(b.1)),
            (a.0 - b.0).abs() * GRID,
            (a.1 - b.1).abs() * GRID
        );
    }
    let _ = writeln!(
        s,
        r##"<line class="diagonal" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#44c" stroke-width="2"/>"##,
        px(a.0),
        py(a.1),
        px(b.0),
        py(b.1)
    );
    for (k, r) in rs.iter().enumerate() {
        let (from, to) = (pt(&r.reactant), pt(&r.product));
        let _ = writeln!(
            s,
            r##"<line class="arrow" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="2" marker-end="url(#head)"><title>{}</title></line>"##,
            px(from.0),
            py(from.1),
            px(to.0),
            py(to.1),
            net.reaction_to_string(k)
        );
        let _ = writeln!(s, r##"<circle cx="{}" cy="{}" r="4" fill="black"/>"##, px(from.0), py(from.1));
    }
    let caption = match &geometry {
        Some(g) => format!("{}, diagonal slope {}", g.form.as_str(), fmt_q(&g.diagonal_slope)),
        None => "reactants share a coordinate: no box".to_string(),
    };
    let _ = writeln!(s, r##"<text x="4" y="14" font-size="12">{}</text>"##, caption);
    s.push_str("</svg>\n");
    Ok(s)
}
