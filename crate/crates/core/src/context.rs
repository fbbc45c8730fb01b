//! Formal contexts and poset inputs, with the Burmeister `.cxt`, CSV and
//! poset edge-list readers/writers.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::bitset::BitSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ContextError {
    #[error("duplicate object name {0:?}")]
    DuplicateObject(String),
    #[error("duplicate attribute name {0:?}")]
    DuplicateAttribute(String),
    #[error("invalid name {0:?}: names must be non-empty and single-line")]
    InvalidName(String),
    #[error("incidence ({0}, {1}) out of range")]
    IncidenceOutOfRange(usize, usize),
}

/// Parse failures; every variant carries the 1-based input line.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed header: {reason}")]
    MalformedHeader { line: usize, reason: String },
    #[error("line {line}: unexpected end of input, expected {expected}")]
    CountMismatch { line: usize, expected: String },
    #[error("line {line}: row has {found} cells, expected {expected}")]
    RowLength {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: illegal character {ch:?} in column {column}")]
    IllegalCharacter {
        line: usize,
        column: usize,
        ch: char,
    },
    #[error("line {line}: illegal cell value {value:?}")]
    IllegalCell { line: usize, value: String },
    #[error("line {line}: duplicate name {name:?}")]
    DuplicateName { line: usize, name: String },
    #[error("line {line}: invalid name {name:?}")]
    InvalidName { line: usize, name: String },
    #[error("line {line}: row has {found} cells, header has {expected}")]
    RaggedRow {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: unexpected trailing content")]
    TrailingContent { line: usize },
    #[error("line {line}: expected `a < b`, found {text:?}")]
    MalformedEdge { line: usize, text: String },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("relation contains a cycle: {}", .0.join(" < "))]
    Cycle(Vec<String>),
    #[error("duplicate element name {0:?}")]
    DuplicateElement(String),
    #[error("pair ({0}, {1}) out of range")]
    PairOutOfRange(usize, usize),
}

/// A formal context `(G, M, I)`: the cross table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalContext {
    objects: Vec<String>,
    attributes: Vec<String>,
    /// Row `g` holds `{g}'`.
    rows: Vec<BitSet>,
    /// Column `m` holds `{m}'`.
    columns: Vec<BitSet>,
}

fn check_name(name: &str) -> bool {
    !name.is_empty() && !name.contains(['\n', '\r'])
}

impl FormalContext {
    pub fn new<I>(
        objects: Vec<String>,
        attributes: Vec<String>,
        incidence: I,
    ) -> Result<Self, ContextError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut seen = HashSet::new();
        for g in &objects {
            if !check_name(g) {
                return Err(ContextError::InvalidName(g.clone()));
            }
            if !seen.insert(g.as_str()) {
                return Err(ContextError::DuplicateObject(g.clone()));
            }
        }
        seen.clear();
        for m in &attributes {
            if !check_name(m) {
                return Err(ContextError::InvalidName(m.clone()));
            }
            if !seen.insert(m.as_str()) {
                return Err(ContextError::DuplicateAttribute(m.clone()));
            }
        }
        let (ng, nm) = (objects.len(), attributes.len());
        let mut rows = vec![BitSet::new(nm); ng];
        let mut columns = vec![BitSet::new(ng); nm];
        for (g, m) in incidence {
            if g >= ng || m >= nm {
                return Err(ContextError::IncidenceOutOfRange(g, m));
            }
            rows[g].insert(m);
            columns[m].insert(g);
        }
        Ok(FormalContext {
            objects,
            attributes,
            rows,
            columns,
        })
    }

    /// The contra-nominal scale `([n], [n], ≠)` with names `1..=n`.
    pub fn contranominal(n: usize) -> Self {
        let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let incidence = (0..n).flat_map(|g| (0..n).filter(move |&m| m != g).map(move |m| (g, m)));
        FormalContext::new(names.clone(), names, incidence).expect("valid contranominal scale")
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_attributes(&self) -> usize {
        self.attributes.len()
    }

    #[inline]
    pub fn incident(&self, g: usize, m: usize) -> bool {
        self.rows[g].contains(m)
    }

    /// `{g}'`, the attributes of object `g`.
    pub fn row(&self, g: usize) -> &BitSet {
        &self.rows[g]
    }

    /// `{m}'`, the objects having attribute `m`.
    pub fn column(&self, m: usize) -> &BitSet {
        &self.columns[m]
    }

    /// Incident pairs in row-major order.
    pub fn incidence(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(g, row)| row.iter().map(move |m| (g, m)))
    }

    pub fn incidence_count(&self) -> usize {
        self.rows.iter().map(BitSet::len).sum()
    }
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
            last: 0,
        }
    }

    fn next_line(&mut self, expected: &str) -> Result<(usize, &'a str), ParseError> {
        match self.inner.next() {
            Some((i, l)) => {
                self.last = i + 1;
                Ok((i + 1, l.trim_end_matches('\r')))
            }
            None => Err(ParseError::CountMismatch {
                line: self.last + 1,
                expected: expected.to_string(),
            }),
        }
    }
}

fn parse_count(line: usize, text: &str, what: &str) -> Result<usize, ParseError> {
    text.trim()
        .parse()
        .map_err(|_| ParseError::MalformedHeader {
            line,
            reason: format!("expected {what}, found {text:?}"),
        })
}

fn read_names(lines: &mut Lines<'_>, count: usize, what: &str) -> Result<Vec<String>, ParseError> {
    let mut names = Vec::with_capacity(count);
    let mut seen = HashSet::new();
    for i in 0..count {
        let (line, text) = lines.next_line(&format!("{what} name {} of {count}", i + 1))?;
        if !check_name(text) {
            return Err(ParseError::InvalidName {
                line,
                name: text.to_string(),
            });
        }
        if !seen.insert(text) {
            return Err(ParseError::DuplicateName {
                line,
                name: text.to_string(),
            });
        }
        names.push(text.to_string());
    }
    Ok(names)
}

/// Parses a Burmeister `.cxt` document.
///
/// Layout: `B`, a blank line, the object count, the attribute count, an
/// optional blank line, one name per line (objects, then attributes), then
/// one row per object of `X` (incident) / `.` (not) characters.
pub fn parse_cxt(text: &str) -> Result<FormalContext, ParseError> {
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    let mut lines = Lines::new(text);
    let (line, head) = lines.next_line("header line \"B\"")?;
    if head.trim() != "B" {
        return Err(ParseError::MalformedHeader {
            line,
            reason: format!("expected \"B\", found {head:?}"),
        });
    }
    let (line, blank) = lines.next_line("blank line after \"B\"")?;
    if !blank.trim().is_empty() {
        return Err(ParseError::MalformedHeader {
            line,
            reason: "expected blank line after \"B\"".into(),
        });
    }
    let (line, g) = lines.next_line("object count")?;
    let ng = parse_count(line, g, "object count")?;
    let (line, m) = lines.next_line("attribute count")?;
    let nm = parse_count(line, m, "attribute count")?;

    // Object names cannot be empty, so a blank line here is the optional separator.
    let mut peek = lines.inner.clone();
    if let Some((_, l)) = peek.next() {
        if l.trim().is_empty() {
            lines.next_line("")?;
        }
    }

    let objects = read_names(&mut lines, ng, "object")?;
    let attributes = read_names(&mut lines, nm, "attribute")?;

    let mut incidence = Vec::new();
    for g in 0..ng {
        let (line, row) = lines.next_line(&format!("row {} of {ng}", g + 1))?;
        let found = row.chars().count();
        if found != nm {
            return Err(ParseError::RowLength {
                line,
                expected: nm,
                found,
            });
        }
        for (m, ch) in row.chars().enumerate() {
            match ch {
                'X' | 'x' => incidence.push((g, m)),
                '.' => {}
                _ => {
                    return Err(ParseError::IllegalCharacter {
                        line,
                        column: m + 1,
                        ch,
                    })
                }
            }
        }
    }
    for (i, rest) in lines.inner.by_ref() {
        if !rest.trim().is_empty() {
            return Err(ParseError::TrailingContent { line: i + 1 });
        }
    }

    Ok(FormalContext::new(objects, attributes, incidence).expect("names and indices validated"))
}

/// Writes the canonical `.cxt` form (with the blank separator line after the counts).
pub fn write_cxt(ctx: &FormalContext) -> String {
    let mut out = String::new();
    let _ = write!(
        out,
        "B\n\n{}\n{}\n\n",
        ctx.num_objects(),
        ctx.num_attributes()
    );
    for name in ctx.objects.iter().chain(&ctx.attributes) {
        out.push_str(name);
        out.push('\n');
    }
    for row in &ctx.rows {
        for m in 0..ctx.num_attributes() {
            out.push(if row.contains(m) { 'X' } else { '.' });
        }
        out.push('\n');
    }
    out
}

/// Parses a comma-separated cross table. The first row names the
/// attributes (its first cell is ignored); each following row is an object
/// name followed by one cell per attribute. Embedded commas are not supported.
pub fn parse_csv(text: &str) -> Result<FormalContext, ParseError> {
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    let mut rows = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty());

    let (hline, header) = rows.next().ok_or(ParseError::MalformedHeader {
        line: 1,
        reason: "missing header row".into(),
    })?;
    let attributes: Vec<String> = header
        .split(',')
        .skip(1)
        .map(|s| s.trim().to_string())
        .collect();
    let mut seen = HashSet::new();
    for a in &attributes {
        if !check_name(a) {
            return Err(ParseError::InvalidName {
                line: hline,
                name: a.clone(),
            });
        }
        if !seen.insert(a.as_str()) {
            return Err(ParseError::DuplicateName {
                line: hline,
                name: a.clone(),
            });
        }
    }

    let mut objects = Vec::new();
    let mut object_names = HashSet::new();
    let mut incidence = Vec::new();
    for (line, row) in rows {
        let cells: Vec<&str> = row.split(',').map(str::trim).collect();
        if cells.len() != attributes.len() + 1 {
            return Err(ParseError::RaggedRow {
                line,
                expected: attributes.len() + 1,
                found: cells.len(),
            });
        }
        let name = cells[0];
        if !check_name(name) {
            return Err(ParseError::InvalidName {
                line,
                name: name.to_string(),
            });
        }
        if !object_names.insert(name.to_string()) {
            return Err(ParseError::DuplicateName {
                line,
                name: name.to_string(),
            });
        }
        let g = objects.len();
        objects.push(name.to_string());
        for (m, cell) in cells[1..].iter().enumerate() {
            match *cell {
                "X" | "x" | "1" => incidence.push((g, m)),
                "" | "0" | "." => {}
                other => {
                    return Err(ParseError::IllegalCell {
                        line,
                        value: other.to_string(),
                    })
                }
            }
        }
    }
    Ok(FormalContext::new(objects, attributes, incidence).expect("names and indices validated"))
}

/// A finite poset given by element names and generating pairs `x ≤ y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetInput {
    pub elements: Vec<String>,
    pub relation: Vec<(usize, usize)>,
}

/// Parses a poset edge list: one `a < b` pair per line. A line holding a
/// single name declares an isolated element; `#` starts a comment.
/// Elements are indexed in order of first appearance.
pub fn parse_poset_edges(text: &str) -> Result<PosetInput, ParseError> {
    let mut elements: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut relation = Vec::new();
    let mut intern = |name: &str| -> usize {
        if let Some(&i) = index.get(name) {
            return i;
        }
        index.insert(name.to_string(), elements.len());
        elements.push(name.to_string());
        elements.len() - 1
    };
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [a] if *a != "<" => {
                intern(a);
            }
            [a, "<", b] => {
                let x = intern(a);
                let y = intern(b);
                relation.push((x, y));
            }
            _ => {
                return Err(ParseError::MalformedEdge {
                    line: i + 1,
                    text: line.to_string(),
                })
            }
        }
    }
    Ok(PosetInput { elements, relation })
}

/// Reflexive-transitive closure of `pairs` over `0..n`; row `x` holds
/// `{y | x ≤ y}`. Fails with a witness cycle (as element indices) if two
/// distinct elements reach each other.
pub fn order_closure(n: usize, pairs: &[(usize, usize)]) -> Result<Vec<BitSet>, Vec<usize>> {
    let mut succ = vec![Vec::new(); n];
    for &(x, y) in pairs {
        if x != y {
            succ[x].push(y);
        }
    }
    // Iterative DFS with colouring; a back edge yields the cycle.
    let mut colour = vec![0u8; n];
    let mut parent = vec![usize::MAX; n];
    let mut post = Vec::with_capacity(n);
    for root in 0..n {
        if colour[root] != 0 {
            continue;
        }
        let mut stack = vec![(root, 0usize)];
        colour[root] = 1;
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if let Some(&w) = succ[v].get(*next) {
                *next += 1;
                match colour[w] {
                    0 => {
                        colour[w] = 1;
                        parent[w] = v;
                        stack.push((w, 0));
                    }
                    1 => {
                        let mut cycle = vec![v];
                        let mut u = v;
                        while u != w {
                            u = parent[u];
                            cycle.push(u);
                        }
                        cycle.reverse();
                        cycle.push(w);
                        return Err(cycle);
                    }
                    _ => {}
                }
            } else {
                colour[v] = 2;
                post.push(v);
                stack.pop();
            }
        }
    }
    let mut up = vec![BitSet::new(n); n];
    for &v in &post {
        let mut row = BitSet::new(n);
        row.insert(v);
        for &w in &succ[v] {
            row.union_with(&up[w]);
        }
        up[v] = row;
    }
    Ok(up)
}

/// Encodes a poset as the context `(P, P, ≤)`; its concept lattice is the
/// Dedekind–MacNeille completion of `P`, which has the same order dimension.
pub fn poset_to_context(p: &PosetInput) -> Result<FormalContext, PosetError> {
    let n = p.elements.len();
    let mut seen = HashSet::new();
    for e in &p.elements {
        if !seen.insert(e.as_str()) {
            return Err(PosetError::DuplicateElement(e.clone()));
        }
    }
    if let Some(&(x, y)) = p.relation.iter().find(|&&(x, y)| x >= n || y >= n) {
        return Err(PosetError::PairOutOfRange(x, y));
    }
    let up = order_closure(n, &p.relation).map_err(|cycle| {
        PosetError::Cycle(cycle.into_iter().map(|i| p.elements[i].clone()).collect())
    })?;
    let incidence = up
        .iter()
        .enumerate()
        .flat_map(|(x, row)| row.iter().map(move |y| (x, y)));
    FormalContext::new(p.elements.clone(), p.elements.clone(), incidence).map_err(|e| match e {
        ContextError::DuplicateObject(s) | ContextError::DuplicateAttribute(s) => {
            PosetError::DuplicateElement(s)
        }
        other => unreachable!("{other}"),
    })
}
