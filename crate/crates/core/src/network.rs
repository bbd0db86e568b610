//! Reaction networks: complexes, reactions, parsing, rendering and embedding.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use serde_json::{json, Map, Value};
use thiserror::Error;

/// Nonnegative stoichiometric coefficients, one per species.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Complex(pub Vec<u32>);

impl Complex {
    pub fn zero(s: usize) -> Self {
        Complex(vec![0; s])
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Total molecularity.
    pub fn order(&self) -> u32 {
        self.0.iter().sum()
    }

    fn project(&self, keep: &[usize]) -> Complex {
        Complex(keep.iter().map(|&i| self.0[i]).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Reaction {
    pub reactant: Complex,
    pub product: Complex,
}

impl Reaction {
    pub fn new(reactant: Vec<u32>, product: Vec<u32>) -> Self {
        Reaction { reactant: Complex(reactant), product: Complex(product) }
    }

    /// Product minus reactant.
    pub fn vector(&self) -> Vec<i64> {
        self.reactant
            .0
            .iter()
            .zip(&self.product.0)
            .map(|(&a, &b)| b as i64 - a as i64)
            .collect()
    }

    pub fn reversed(&self) -> Reaction {
        Reaction { reactant: self.product.clone(), product: self.reactant.clone() }
    }

    pub fn is_trivial(&self) -> bool {
        self.reactant == self.product
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NetworkError {
    #[error("network has no reactions")]
    Empty,
    #[error("reaction {0} has identical reactant and product")]
    Trivial(usize),
    #[error("reaction {0} duplicates reaction {1}")]
    Duplicate(usize, usize),
    #[error("species {0} never appears with a nonzero coefficient")]
    UnusedSpecies(String),
    #[error("reaction {0} has {1} coefficients, expected {2}")]
    Arity(usize, usize, usize),
    #[error("species name {0:?} is not a valid identifier or is repeated")]
    BadSpecies(String),
}

/// A validated mass-action reaction network. Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Network {
    species: Vec<String>,
    reactions: Vec<Reaction>,
    complexes: Vec<Complex>,
    reaction_complexes: Vec<(usize, usize)>,
    pairs: Vec<Option<usize>>,
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Network {
    pub fn new(species: Vec<String>, reactions: Vec<Reaction>) -> Result<Self, NetworkError> {
        let s = species.len();
        if reactions.is_empty() {
            return Err(NetworkError::Empty);
        }
        let mut seen_names = HashSet::new();
        for name in &species {
            if !is_identifier(name) || !seen_names.insert(name.as_str()) {
                return Err(NetworkError::BadSpecies(name.clone()));
            }
        }
        let mut seen: HashMap<&Reaction, usize> = HashMap::new();
        for (k, r) in reactions.iter().enumerate() {
            for c in [&r.reactant, &r.product] {
                if c.len() != s {
                    return Err(NetworkError::Arity(k, c.len(), s));
                }
            }
            if r.is_trivial() {
                return Err(NetworkError::Trivial(k));
            }
            if let Some(&j) = seen.get(r) {
                return Err(NetworkError::Duplicate(k, j));
            }
            seen.insert(r, k);
        }
        for (i, name) in species.iter().enumerate() {
            let used = reactions.iter().any(|r| r.reactant.0[i] > 0 || r.product.0[i] > 0);
            if !used {
                return Err(NetworkError::UnusedSpecies(name.clone()));
            }
        }
        let mut complexes: Vec<Complex> = Vec::new();
        let mut index: HashMap<Complex, usize> = HashMap::new();
        let mut intern = |c: &Complex, complexes: &mut Vec<Complex>| -> usize {
            *index.entry(c.clone()).or_insert_with(|| {
                complexes.push(c.clone());
                complexes.len() - 1
            })
        };
        let mut reaction_complexes = Vec::with_capacity(reactions.len());
        for r in &reactions {
            let a = intern(&r.reactant, &mut complexes);
            let b = intern(&r.product, &mut complexes);
            reaction_complexes.push((a, b));
        }
        let pairs = reactions.iter().map(|r| seen.get(&r.reversed()).copied()).collect();
        Ok(Network { species, reactions, complexes, reaction_complexes, pairs })
    }

    /// Builds a network with species named `A`, `B`, ... (or `X0`, `X1`, ...
    /// beyond 26).
    pub fn from_reactions(reactions: Vec<Reaction>) -> Result<Self, NetworkError> {
        let s = reactions.first().map_or(0, |r| r.reactant.len());
        Self::new(default_names(s), reactions)
    }

    pub fn species(&self) -> &[String] {
        &self.species
    }

    pub fn reactions(&self) -> &[Reaction] {
        &self.reactions
    }

    pub fn complexes(&self) -> &[Complex] {
        &self.complexes
    }

    /// Complex indices `(reactant, product)` of each reaction.
    pub fn reaction_complexes(&self) -> &[(usize, usize)] {
        &self.reaction_complexes
    }

    /// Index of the reverse reaction, when present.
    pub fn reversible_pair(&self, k: usize) -> Option<usize> {
        self.pairs[k]
    }

    pub fn num_species(&self) -> usize {
        self.species.len()
    }

    pub fn num_reactions(&self) -> usize {
        self.reactions.len()
    }

    pub fn num_complexes(&self) -> usize {
        self.complexes.len()
    }

    pub fn species_index(&self, name: &str) -> Option<usize> {
        self.species.iter().position(|s| s == name)
    }

    /// Reversible pairs `(i, j)` with `i < j`.
    pub fn pair_list(&self) -> Vec<(usize, usize)> {
        self.pairs
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.filter(|&j| i < j).map(|j| (i, j)))
            .collect()
    }

    /// Reactions without a reverse partner.
    pub fn irreversible(&self) -> Vec<usize> {
        (0..self.reactions.len()).filter(|&k| self.pairs[k].is_none()).collect()
    }

    pub fn max_molecularity(&self) -> u32 {
        self.complexes.iter().map(Complex::order).max().unwrap_or(0)
    }

    pub fn reaction_vectors(&self) -> Vec<Vec<i64>> {
        self.reactions.iter().map(Reaction::vector).collect()
    }

    /// Same network with the reactions at the given positions, in that order.
    pub fn subnetwork(&self, keep: &[usize]) -> Result<Network, NetworkError> {
        let reactions: Vec<Reaction> = keep.iter().map(|&k| self.reactions[k].clone()).collect();
        tighten(self.species.clone(), reactions)
    }

    /// Relabels species in first-appearance order, scanning each reaction's
    /// reactant then product.
    pub fn in_appearance_order(&self) -> Network {
        let mut order: Vec<usize> = Vec::new();
        for r in &self.reactions {
            for c in [&r.reactant, &r.product] {
                for (i, &v) in c.0.iter().enumerate() {
                    if v > 0 && !order.contains(&i) {
                        order.push(i);
                    }
                }
            }
        }
        self.permute_species(&order)
    }

    /// New network whose species `k` is the old species `order[k]`.
    pub fn permute_species(&self, order: &[usize]) -> Network {
        let species = order.iter().map(|&i| self.species[i].clone()).collect();
        let reactions = self
            .reactions
            .iter()
            .map(|r| Reaction { reactant: r.reactant.project(order), product: r.product.project(order) })
            .collect();
        Network::new(species, reactions).expect("permutation preserves validity")
    }

    pub fn to_json(&self) -> Value {
        let complex_json = |c: &Complex| {
            let mut m = Map::new();
            for (i, &v) in c.0.iter().enumerate() {
                if v > 0 {
                    m.insert(self.species[i].clone(), json!(v));
                }
            }
            Value::Object(m)
        };
        let reactions: Vec<Value> = self
            .reactions
            .iter()
            .enumerate()
            .map(|(k, r)| {
                json!({
                    "reactant": complex_json(&r.reactant),
                    "product": complex_json(&r.product),
                    "reversible_pair": self.pairs[k],
                })
            })
            .collect();
        json!({ "species": self.species, "reactions": reactions })
    }

    pub fn complex_to_string(&self, c: &Complex) -> String {
        if c.is_zero() {
            return "0".to_string();
        }
        let terms: Vec<String> = c
            .0
            .iter()
            .enumerate()
            .filter(|(_, &v)| v > 0)
            .map(|(i, &v)| if v == 1 { self.species[i].clone() } else { format!("{}{}", v, self.species[i]) })
            .collect();
        terms.join(" + ")
    }

    pub fn reaction_to_string(&self, k: usize) -> String {
        let r = &self.reactions[k];
        format!("{} -> {}", self.complex_to_string(&r.reactant), self.complex_to_string(&r.product))
    }

    /// One reaction per line; a reaction immediately followed by its reverse
    /// is written with `<->`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let mut k = 0;
        while k < self.reactions.len() {
            let r = &self.reactions[k];
            let lhs = self.complex_to_string(&r.reactant);
            let rhs = self.complex_to_string(&r.product);
            if self.pairs[k] == Some(k + 1) {
                out.push_str(&format!("{} <-> {}\n", lhs, rhs));
                k += 2;
            } else {
                out.push_str(&format!("{} -> {}\n", lhs, rhs));
                k += 1;
            }
        }
        out
    }

    /// Compact single-line form, `;`-separated.
    pub fn render_inline(&self) -> String {
        self.render().trim_end().replace('\n', "; ")
    }
}

impl fmt::Display for Network {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.render_inline())
    }
}

pub fn default_names(s: usize) -> Vec<String> {
    (0..s)
        .map(|i| if s <= 26 { ((b'A' + i as u8) as char).to_string() } else { format!("X{}", i) })
        .collect()
}

/// Drops species that never appear, then validates.
fn tighten(species: Vec<String>, reactions: Vec<Reaction>) -> Result<Network, NetworkError> {
    let s = species.len();
    let keep: Vec<usize> = (0..s)
        .filter(|&i| reactions.iter().any(|r| r.reactant.0[i] > 0 || r.product.0[i] > 0))
        .collect();
    let species = keep.iter().map(|&i| species[i].clone()).collect();
    let reactions = reactions
        .iter()
        .map(|r| Reaction { reactant: r.reactant.project(&keep), product: r.product.project(&keep) })
        .collect();
    Network::new(species, reactions)
}

/// Zeroes the coefficients of species outside `keep_species`, drops the
/// reactions that become trivial and merges duplicates (first occurrence
/// wins). Coefficient vectors keep their length.
pub fn restrict_reactions(reactions: &[Reaction], keep_species: &BTreeSet<usize>) -> Vec<Reaction> {
    let mut out: Vec<Reaction> = Vec::new();
    let mut seen = HashSet::new();
    for r in reactions {
        let zero = |c: &Complex| {
            Complex(c.0.iter().enumerate().map(|(i, &v)| if keep_species.contains(&i) { v } else { 0 }).collect())
        };
        let nr = Reaction { reactant: zero(&r.reactant), product: zero(&r.product) };
        if nr.is_trivial() || !seen.insert(nr.clone()) {
            continue;
        }
        out.push(nr);
    }
    out
}

/// Which reactions and species were removed from the host network.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Removal {
    pub reactions: BTreeSet<usize>,
    pub species: BTreeSet<usize>,
}

impl Removal {
    pub fn describe(&self, net: &Network) -> String {
        let mut parts = Vec::new();
        if !self.reactions.is_empty() {
            let rs: Vec<String> = self.reactions.iter().map(|&k| net.reaction_to_string(k)).collect();
            parts.push(format!("reactions [{}]", rs.join(", ")));
        }
        if !self.species.is_empty() {
            let ss: Vec<&str> = self.species.iter().map(|&i| net.species[i].as_str()).collect();
            parts.push(format!("species [{}]", ss.join(", ")));
        }
        if parts.is_empty() {
            "nothing".to_string()
        } else {
            format!("remove {}", parts.join(" and "))
        }
    }
}

/// Removes reactions, then restricts to the remaining species and tightens.
/// `None` when nothing survives.
pub fn embedded_network(net: &Network, removal: &Removal) -> Option<Network> {
    let kept: Vec<Reaction> = net
        .reactions
        .iter()
        .enumerate()
        .filter(|(k, _)| !removal.reactions.contains(k))
        .map(|(_, r)| r.clone())
        .collect();
    let keep_species: BTreeSet<usize> = (0..net.num_species()).filter(|i| !removal.species.contains(i)).collect();
    let restricted = restrict_reactions(&kept, &keep_species);
    if restricted.is_empty() {
        return None;
    }
    Some(tighten(net.species.clone(), restricted).expect("restriction yields a valid network"))
}

/// Order-independent identity of a network: species names and the set of
/// reactions written over names.
pub fn reaction_set_key(net: &Network) -> BTreeSet<(Vec<(String, u32)>, Vec<(String, u32)>)> {
    let named = |c: &Complex| -> Vec<(String, u32)> {
        let mut v: Vec<(String, u32)> =
            c.0.iter().enumerate().filter(|(_, &x)| x > 0).map(|(i, &x)| (net.species[i].clone(), x)).collect();
        v.sort();
        v
    };
    net.reactions.iter().map(|r| (named(&r.reactant), named(&r.product))).collect()
}

/// Every proper, nonempty embedded network, deduplicated by reaction set.
pub fn enumerate_embedded(net: &Network) -> Vec<(Network, Removal)> {
    let r = net.num_reactions();
    let s = net.num_species();
    assert!(r < 24 && s < 24, "embedded enumeration is exponential; network too large");
    let mut seen = HashSet::new();
    seen.insert(reaction_set_key(net));
    let mut out = Vec::new();
    for rmask in 0u32..(1 << r) {
        if rmask.count_ones() as usize == r {
            continue;
        }
        for smask in 0u32..(1 << s) {
            if rmask == 0 && smask == 0 {
                continue;
            }
            if smask.count_ones() as usize == s {
                continue;
            }
            let removal = Removal {
                reactions: (0..r).filter(|k| rmask >> k & 1 == 1).collect(),
                species: (0..s).filter(|i| smask >> i & 1 == 1).collect(),
            };
            if let Some(sub) = embedded_network(net, &removal) {
                if seen.insert(reaction_set_key(&sub)) {
                    out.push((sub, removal));
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Parsing

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    BadCoefficient(String),
    Trivial,
    Duplicate { first_line: usize },
    Empty,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {col}: {}", describe_kind(.kind))]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

fn describe_kind(k: &ParseErrorKind) -> String {
    match k {
        ParseErrorKind::Syntax(m) => format!("syntax error: {}", m),
        ParseErrorKind::BadCoefficient(m) => format!("bad coefficient: {}", m),
        ParseErrorKind::Trivial => "trivial reaction (reactant equals product)".to_string(),
        ParseErrorKind::Duplicate { first_line } => format!("duplicate reaction (first on line {})", first_line),
        ParseErrorKind::Empty => "no reactions".to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Arrow(ArrowKind),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ArrowKind {
    Forward,
    Backward,
    Both,
}

fn lex_line(line: &str, lineno: usize) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = line.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    let err = |col: usize, kind: ParseErrorKind| ParseError { line: lineno, col, kind };
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c == '+' {
            toks.push((Tok::Plus, col));
            i += 1;
        } else if c == '-' && chars.get(i + 1) == Some(&'>') {
            toks.push((Tok::Arrow(ArrowKind::Forward), col));
            i += 2;
        } else if c == '<' && chars.get(i + 1) == Some(&'-') {
            if chars.get(i + 2) == Some(&'>') {
                toks.push((Tok::Arrow(ArrowKind::Both), col));
                i += 3;
            } else {
                toks.push((Tok::Arrow(ArrowKind::Backward), col));
                i += 2;
            }
        } else if c == '-' {
            let mut j = i + 1;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            if j > i + 1 {
                let s: String = chars[i..j].iter().collect();
                return Err(err(col, ParseErrorKind::BadCoefficient(format!("negative coefficient {}", s))));
            }
            return Err(err(col, ParseErrorKind::Syntax("unexpected '-'".into())));
        } else if c.is_ascii_digit() {
            let mut j = i;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            if j < chars.len() && (chars[j] == '.' || chars[j] == '/') {
                let mut k = j + 1;
                while k < chars.len() && chars[k].is_ascii_digit() {
                    k += 1;
                }
                let s: String = chars[i..k].iter().collect();
                return Err(err(col, ParseErrorKind::BadCoefficient(format!("non-integer coefficient {}", s))));
            }
            toks.push((Tok::Num(chars[i..j].iter().collect()), col));
            i = j;
        } else if c.is_ascii_alphabetic() {
            let mut j = i;
            while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                j += 1;
            }
            toks.push((Tok::Ident(chars[i..j].iter().collect()), col));
            i = j;
        } else {
            return Err(err(col, ParseErrorKind::Syntax(format!("unexpected character {:?}", c))));
        }
    }
    Ok(toks)
}

/// A complex as (species name, coefficient, column) terms; empty for `0`.
type RawComplex = Vec<(String, u32, usize)>;

fn parse_complex(
    toks: &[(Tok, usize)],
    pos: &mut usize,
    lineno: usize,
    end_col: usize,
) -> Result<RawComplex, ParseError> {
    let err = |col: usize, kind: ParseErrorKind| ParseError { line: lineno, col, kind };
    let here = |p: usize| toks.get(p).map_or(end_col, |t| t.1);
    // the zero complex
    if let Some((Tok::Num(n), col)) = toks.get(*pos) {
        let next_is_ident = matches!(toks.get(*pos + 1), Some((Tok::Ident(_), _)));
        if !next_is_ident {
            if n.bytes().all(|b| b == b'0') {
                *pos += 1;
                return Ok(Vec::new());
            }
            return Err(err(*col, ParseErrorKind::Syntax(format!("expected species after {}", n))));
        }
    }
    let mut terms = Vec::new();
    loop {
        let mut coeff = 1u32;
        let mut ccol = here(*pos);
        if let Some((Tok::Num(n), col)) = toks.get(*pos) {
            ccol = *col;
            let v: u64 = n.parse().unwrap_or(u64::MAX);
            if v == 0 {
                return Err(err(*col, ParseErrorKind::BadCoefficient("coefficient must be at least 1".into())));
            }
            if v > u32::MAX as u64 {
                return Err(err(*col, ParseErrorKind::BadCoefficient(format!("coefficient {} too large", n))));
            }
            coeff = v as u32;
            *pos += 1;
        }
        match toks.get(*pos) {
            Some((Tok::Ident(name), _)) => {
                terms.push((name.clone(), coeff, ccol));
                *pos += 1;
            }
            _ => return Err(err(here(*pos), ParseErrorKind::Syntax("expected species name".into()))),
        }
        if matches!(toks.get(*pos), Some((Tok::Plus, _))) {
            *pos += 1;
        } else {
            break;
        }
    }
    Ok(terms)
}

/// Parses the line-oriented network format.
pub fn parse_network(text: &str) -> Result<Network, ParseError> {
    let mut species: Vec<String> = Vec::new();
    // (reactant terms, product terms, line, col)
    let mut raw: Vec<(RawComplex, RawComplex, usize, usize)> = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let lineno = ln + 1;
        let toks = lex_line(line, lineno)?;
        if toks.is_empty() {
            continue;
        }
        let end_col = line.chars().count() + 1;
        let mut pos = 0;
        let lhs = parse_complex(&toks, &mut pos, lineno, end_col)?;
        let (arrow, acol) = match toks.get(pos) {
            Some((Tok::Arrow(a), c)) => (*a, *c),
            Some((_, c)) => {
                return Err(ParseError {
                    line: lineno,
                    col: *c,
                    kind: ParseErrorKind::Syntax("expected '->', '<-' or '<->'".into()),
                })
            }
            None => {
                return Err(ParseError {
                    line: lineno,
                    col: end_col,
                    kind: ParseErrorKind::Syntax("expected '->', '<-' or '<->'".into()),
                })
            }
        };
        pos += 1;
        let rhs = parse_complex(&toks, &mut pos, lineno, end_col)?;
        if let Some((_, c)) = toks.get(pos) {
            return Err(ParseError {
                line: lineno,
                col: *c,
                kind: ParseErrorKind::Syntax("unexpected input after reaction".into()),
            });
        }
        for (name, _, _) in lhs.iter().chain(&rhs) {
            if !species.contains(name) {
                species.push(name.clone());
            }
        }
        match arrow {
            ArrowKind::Forward => raw.push((lhs, rhs, lineno, acol)),
            ArrowKind::Backward => raw.push((rhs, lhs, lineno, acol)),
            ArrowKind::Both => {
                raw.push((lhs.clone(), rhs.clone(), lineno, acol));
                raw.push((rhs, lhs, lineno, acol));
            }
        }
    }
    if raw.is_empty() {
        return Err(ParseError { line: 1, col: 1, kind: ParseErrorKind::Empty });
    }
    let s = species.len();
    let to_complex = |terms: &RawComplex| {
        let mut v = vec![0u32; s];
        for (name, c, _) in terms {
            let i = species.iter().position(|x| x == name).unwrap();
            v[i] = v[i].saturating_add(*c);
        }
        Complex(v)
    };
    let mut reactions = Vec::with_capacity(raw.len());
    let mut first_line: HashMap<Reaction, usize> = HashMap::new();
    for (lhs, rhs, line, col) in &raw {
        let r = Reaction { reactant: to_complex(lhs), product: to_complex(rhs) };
        if r.is_trivial() {
            return Err(ParseError { line: *line, col: *col, kind: ParseErrorKind::Trivial });
        }
        if let Some(&fl) = first_line.get(&r) {
            return Err(ParseError { line: *line, col: *col, kind: ParseErrorKind::Duplicate { first_line: fl } });
        }
        first_line.insert(r.clone(), *line);
        reactions.push(r);
    }
    Ok(Network::new(species, reactions).expect("parser output is a valid network"))
}

/// Parses the inline form where `;` separates reactions.
pub fn parse_inline(text: &str) -> Result<Network, ParseError> {
    parse_network(&text.replace(';', "\n"))
}
