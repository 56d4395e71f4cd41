//! Hasse diagrams (DOT) and Cayley tables (CSV) for finite element sets.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::Algebra;
use crate::element::ApElem;
use crate::error::Result;

/// Fixed-width bitset over element indices.
#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn subtract(&mut self, other: &Bits) {
        for (w, o) in self.0.iter_mut().zip(&other.0) {
            *w &= !o;
        }
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.0.len() * 64).filter(|&i| self.get(i))
    }
}

/// Covering pairs `(i, j)` with `elems[i] < elems[j]` and nothing from
/// `elems` strictly between them, sorted.
pub fn covering_edges(alg: &Algebra, elems: &[ApElem]) -> Result<Vec<(usize, usize)>> {
    let len = elems.len();
    let mut above = vec![Bits::new(len); len];
    for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate() {
            if alg.lt(a, b)? {
                above[i].set(j);
            }
        }
    }
    let mut edges = Vec::new();
    for i in 0..len {
        let mut covers = above[i].clone();
        for j in above[i].ones().filter(|&j| j < len) {
            covers.subtract(&above[j]);
        }
        edges.extend(covers.ones().filter(|&j| j < len).map(|j| (i, j)));
    }
    Ok(edges)
}

/// The covering relation as a bottom-to-top DOT digraph.
pub fn hasse_dot(alg: &Algebra, elems: &[ApElem], name: &str) -> Result<String> {
    let edges = covering_edges(alg, elems)?;
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", name.replace('"', "\\\""));
    out.push_str("  rankdir=BT;\n");
    for (i, a) in elems.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{a}\"];");
    }
    for (i, j) in edges {
        let _ = writeln!(out, "  n{i} -> n{j};");
    }
    out.push_str("}\n");
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableOp {
    Mul,
    Div,
    Meet,
    Join,
    Oplus,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown operation {0:?} (expected mul, div, meet, join or oplus)")]
pub struct UnknownOp(pub String);

impl TableOp {
    pub fn name(&self) -> &'static str {
        match self {
            TableOp::Mul => "mul",
            TableOp::Div => "div",
            TableOp::Meet => "meet",
            TableOp::Join => "join",
            TableOp::Oplus => "oplus",
        }
    }

    pub fn apply(&self, alg: &Algebra, a: &ApElem, b: &ApElem) -> Result<ApElem> {
        match self {
            TableOp::Mul => alg.mul(a, b),
            TableOp::Div => alg.div(a, b),
            TableOp::Meet => alg.meet(a, b),
            TableOp::Join => alg.join(a, b),
            TableOp::Oplus => alg.oplus(a, b),
        }
    }
}

impl fmt::Display for TableOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableOp {
    type Err = UnknownOp;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        [TableOp::Mul, TableOp::Div, TableOp::Meet, TableOp::Join, TableOp::Oplus]
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| UnknownOp(s.to_string()))
    }
}

/// Cayley table as CSV: header row of column operands, then one row per left operand.
pub fn cayley_csv(alg: &Algebra, elems: &[ApElem], op: TableOp) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec![op.name().to_string()];
    header.extend(elems.iter().map(ApElem::to_string));
    w.write_record(&header).expect("writing to memory");
    for a in elems {
        let mut row = vec![a.to_string()];
        for b in elems {
            row.push(op.apply(alg, a, b)?.to_string());
        }
        w.write_record(&row).expect("writing to memory");
    }
    let bytes = w.into_inner().expect("flushing to memory");
    Ok(String::from_utf8(bytes).expect("literals are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{SubalgebraId, Window};

    #[test]
    fn smallest_algebra_is_a_four_chain() {
        // Level 0 lies wholly below level 1 when n = 1.
        let alg = Algebra::from_indices(1, 1).unwrap();
        let elems = Window::new(alg.params(), 0).unwrap().enumerate();
        let literals: Vec<String> = elems.iter().map(ApElem::to_string).collect();
        assert_eq!(literals, ["((0,0),0)", "((1,0),0)", "((0,0),1)", "((1,0),1)"]);
        assert_eq!(covering_edges(&alg, &elems).unwrap(), [(0, 2), (1, 0), (2, 3)]);
    }

    #[test]
    fn dot_shape() {
        let alg = Algebra::from_indices(1, 1).unwrap();
        let elems = vec![alg.bot(), alg.top()];
        let dot = hasse_dot(&alg, &elems, "l2").unwrap();
        assert_eq!(
            dot,
            "digraph \"l2\" {\n  rankdir=BT;\n  n0 [label=\"((1,0),0)\"];\n  n1 [label=\"((1,0),1)\"];\n  n0 -> n1;\n}\n"
        );
    }

    #[test]
    fn wide_sets_cross_word_boundaries() {
        let alg = Algebra::from_indices(3, 3).unwrap();
        let elems = Window::new(alg.params(), 4).unwrap().enumerate();
        assert!(elems.len() > 64);
        let edges = covering_edges(&alg, &elems).unwrap();
        for &(i, j) in &edges {
            assert!(alg.lt(&elems[i], &elems[j]).unwrap());
        }
    }

    #[test]
    fn table_csv() {
        let alg = Algebra::from_indices(1, 1).unwrap();
        let elems = SubalgebraId::L2.finite_members(&alg).unwrap().unwrap();
        let csv = cayley_csv(&alg, &elems, TableOp::Mul).unwrap();
        let bot = alg.bot().to_string();
        let top = alg.top().to_string();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], format!("mul,\"{bot}\",\"{top}\""));
        assert_eq!(lines[2], format!("\"{top}\",\"{bot}\",\"{top}\""));
    }

    #[test]
    fn op_names() {
        for op in ["mul", "div", "meet", "join", "oplus"] {
            assert_eq!(op.parse::<TableOp>().unwrap().name(), op);
        }
        assert!("add".parse::<TableOp>().is_err());
    }
}
