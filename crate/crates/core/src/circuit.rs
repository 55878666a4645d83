//! Exhaustive search for the smallest {and, or, xor} circuits that implement
//! the bipedal operations.
//!
//! Each operation is a map from four input bits `(mag1, sgn1, mag2, sgn2)`
//! to two output bits `(mag, sgn)`. Whenever the result trit is zero its sign
//! bit is free, which turns the target into a partial truth table. A
//! function of four bits is a 16-bit word (bit `r` = value on input row `r`),
//! so a candidate circuit is checked against all inputs with a handful of
//! word operations.
//!
//! Row `r` has `mag1 = r>>3 & 1`, `sgn1 = r>>2 & 1`, `mag2 = r>>1 & 1`,
//! `sgn2 = r & 1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::f3::cmod3;

/// Largest gate budget accepted by [`search_min_circuit`].
pub const MAX_SEARCH_GATES: usize = 8;

const INPUT_NAMES: [&str; 4] = ["mag1", "sgn1", "mag2", "sgn2"];
const ALL_ROWS: u64 = 0xffff;

/// Truth tables of the four inputs.
const INPUTS: [u64; 4] = [0xff00, 0xf0f0, 0xcccc, 0xaaaa];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldOp {
    pub const ALL: [FieldOp; 4] = [FieldOp::Add, FieldOp::Sub, FieldOp::Mul, FieldOp::Div];

    pub fn name(self) -> &'static str {
        match self {
            FieldOp::Add => "add",
            FieldOp::Sub => "sub",
            FieldOp::Mul => "mul",
            FieldOp::Div => "div",
        }
    }

    /// GF(3) result, or `None` for division by zero.
    fn apply(self, a: i8, b: i8) -> Option<i8> {
        let (a, b) = (a as i128, b as i128);
        match self {
            FieldOp::Add => Some(cmod3(a + b)),
            FieldOp::Sub => Some(cmod3(a - b)),
            FieldOp::Mul => Some(cmod3(a * b)),
            // Nonzero elements of GF(3) are self-inverse.
            FieldOp::Div => (b != 0).then(|| cmod3(a * b)),
        }
    }
}

impl std::str::FromStr for FieldOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FieldOp::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown operation {s:?} (expected add, sub, mul or div)")))
    }
}

impl fmt::Display for FieldOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Required values of one output over the 16 input rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OutputSpec {
    /// Rows whose value is fixed.
    pub care: u16,
    /// Required values on `care` rows; zero elsewhere.
    pub value: u16,
}

impl OutputSpec {
    #[inline]
    fn accepts(self, table: u64) -> bool {
        (table ^ self.value as u64) & self.care as u64 == 0
    }

    /// `Some(bit)` if row `r` is specified.
    pub fn at(self, r: usize) -> Option<bool> {
        (self.care >> r & 1 == 1).then_some(self.value >> r & 1 == 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartialTruthTable {
    pub op: FieldOp,
    pub mag: OutputSpec,
    pub sgn: OutputSpec,
}

impl PartialTruthTable {
    /// Specified `(mag, sgn)` for the input bits `(mag1, sgn1, mag2, sgn2)`.
    pub fn entry(&self, inputs: [u8; 4]) -> (Option<bool>, Option<bool>) {
        let r = inputs.iter().fold(0usize, |acc, &b| (acc << 1) | (b & 1) as usize);
        (self.mag.at(r), self.sgn.at(r))
    }
}

fn psi(mag: usize, sgn: usize) -> i8 {
    match (mag, sgn) {
        (0, _) => 0,
        (_, 0) => 1,
        _ => -1,
    }
}

/// Partial truth table of `op`: magnitude always specified, sign free on
/// zero results, both free when dividing by zero.
pub fn build_partial_table(op: FieldOp) -> PartialTruthTable {
    let mut mag = OutputSpec { care: 0, value: 0 };
    let mut sgn = OutputSpec { care: 0, value: 0 };
    for r in 0..16 {
        let a = psi(r >> 3 & 1, r >> 2 & 1);
        let b = psi(r >> 1 & 1, r & 1);
        let Some(c) = op.apply(a, b) else { continue };
        mag.care |= 1 << r;
        if c != 0 {
            mag.value |= 1 << r;
            sgn.care |= 1 << r;
            if c == -1 {
                sgn.value |= 1 << r;
            }
        }
    }
    PartialTruthTable { op, mag, sgn }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateKind {
    And,
    Or,
    Xor,
}

impl GateKind {
    const ALL: [GateKind; 3] = [GateKind::And, GateKind::Or, GateKind::Xor];

    #[inline]
    fn eval(self, a: u64, b: u64) -> u64 {
        match self {
            GateKind::And => a & b,
            GateKind::Or => a | b,
            GateKind::Xor => a ^ b,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            GateKind::And => "&",
            GateKind::Or => "|",
            GateKind::Xor => "^",
        }
    }
}

/// Gate reading two earlier nodes. Nodes `0..4` are the inputs, node `4 + g`
/// is gate `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gate {
    pub kind: GateKind,
    pub a: usize,
    pub b: usize,
}

/// Straight-line program with two designated output nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    pub gates: Vec<Gate>,
    pub mag_out: usize,
    pub sgn_out: usize,
}

impl Circuit {
    pub fn new(gates: Vec<Gate>, mag_out: usize, sgn_out: usize) -> Result<Self> {
        for (g, gate) in gates.iter().enumerate() {
            if gate.a >= 4 + g || gate.b >= 4 + g {
                return Err(Error::InvalidArgument(format!("gate {g} reads a node that is not yet defined")));
            }
        }
        let nodes = 4 + gates.len();
        if mag_out >= nodes || sgn_out >= nodes {
            return Err(Error::InvalidArgument("output refers to a missing node".into()));
        }
        Ok(Circuit { gates, mag_out, sgn_out })
    }

    pub fn gate_count(&self) -> usize {
        self.gates.len()
    }

    /// Bitsliced evaluation: each input word carries one bit per lane.
    pub fn eval_words(&self, inputs: [u64; 4]) -> (u64, u64) {
        let mut nodes = Vec::with_capacity(4 + self.gates.len());
        nodes.extend_from_slice(&inputs);
        for g in &self.gates {
            nodes.push(g.kind.eval(nodes[g.a], nodes[g.b]));
        }
        (nodes[self.mag_out], nodes[self.sgn_out])
    }

    /// Output truth tables over the 16 input rows.
    pub fn truth_tables(&self) -> (u16, u16) {
        let (m, s) = self.eval_words(INPUTS);
        (m as u16, s as u16)
    }

    /// One line per input row: inputs, outputs, and the table's requirement.
    pub fn certificate(&self, t: &PartialTruthTable) -> String {
        let (m, s) = self.truth_tables();
        let show = |spec: Option<bool>| match spec {
            Some(true) => "1",
            Some(false) => "0",
            None => "*",
        };
        let mut out = String::from("mag1 sgn1 mag2 sgn2 | mag sgn | want\n");
        for r in (0..16).rev() {
            out.push_str(&format!(
                "   {}    {}    {}    {} |   {}   {} | {} {}\n",
                r >> 3 & 1,
                r >> 2 & 1,
                r >> 1 & 1,
                r & 1,
                m >> r & 1,
                s >> r & 1,
                show(t.mag.at(r)),
                show(t.sgn.at(r)),
            ));
        }
        out
    }
}

fn node_name(i: usize) -> String {
    if i < 4 {
        INPUT_NAMES[i].to_string()
    } else {
        format!("g{}", i - 4)
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (g, gate) in self.gates.iter().enumerate() {
            writeln!(f, "g{g} = {} {} {}", node_name(gate.a), gate.kind.symbol(), node_name(gate.b))?;
        }
        writeln!(f, "mag = {}", node_name(self.mag_out))?;
        write!(f, "sgn = {}", node_name(self.sgn_out))
    }
}

/// True iff the circuit meets every specified entry of `t`.
pub fn verify_circuit(c: &Circuit, t: &PartialTruthTable) -> bool {
    let (m, s) = c.eval_words(INPUTS);
    t.mag.accepts(m) && t.sgn.accepts(s)
}

/// The printed bipedal formulas as circuits, with shared subterms computed
/// once.
pub fn reference_circuit(op: FieldOp) -> Circuit {
    use GateKind::*;
    const MAG1: usize = 0;
    const SGN1: usize = 1;
    const MAG2: usize = 2;
    const SGN2: usize = 3;
    let g = |kind, a, b| Gate { kind, a, b };
    let (gates, mag, sgn) = match op {
        // x = mag2 & (mag1 ^ sgn1 ^ sgn2); mag = x | (mag1 ^ mag2); sgn = x ^ sgn1
        FieldOp::Add => (
            vec![g(Xor, MAG1, SGN1), g(Xor, 4, SGN2), g(And, MAG2, 5), g(Xor, MAG1, MAG2), g(Or, 6, 7), g(Xor, 6, SGN1)],
            8,
            9,
        ),
        // x = mag1 & (sgn1 ^ sgn2); mag = x | (mag1 ^ mag2); sgn = x ^ (mag2 ^ sgn2)
        FieldOp::Sub => (
            vec![g(Xor, SGN1, SGN2), g(And, MAG1, 4), g(Xor, MAG1, MAG2), g(Or, 5, 6), g(Xor, MAG2, SGN2), g(Xor, 5, 8)],
            7,
            9,
        ),
        FieldOp::Mul => (vec![g(And, MAG1, MAG2), g(Xor, SGN1, SGN2)], 4, 5),
        FieldOp::Div => (vec![g(Xor, SGN1, SGN2)], MAG1, 4),
    };
    Circuit::new(gates, mag, sgn).expect("well-formed reference circuit")
}

/// Smallest circuit (by gate count, at most `max_gates`) satisfying `t`, or
/// `None` if there is none within the budget. Among circuits of minimal size
/// the first in enumeration order is returned.
pub fn search_min_circuit(t: &PartialTruthTable, max_gates: usize) -> Result<Option<Circuit>> {
    if max_gates > MAX_SEARCH_GATES {
        return Err(Error::DimensionTooLarge { what: "circuit search", n: max_gates, max: MAX_SEARCH_GATES });
    }
    for k in 0..=max_gates {
        if let Some(c) = search_exact(t, k) {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// Depth-`k` search, complete for circuits in which every gate feeds a later
/// gate or an output. Any circuit with a dead gate shrinks to a smaller one,
/// so iterating `k` upward from 0 finds a minimum.
///
/// Pruning:
/// - no gate may reproduce the truth table of an earlier node;
/// - a gate that does not read its immediate predecessor must have a larger
///   truth table than it (every DAG has one such ordering: repeatedly emit
///   the ready gate with the smallest table);
/// - at most `2 * remaining + 2` gates may still be unread.
fn search_exact(t: &PartialTruthTable, k: usize) -> Option<Circuit> {
    let mut s = Search {
        table: *t,
        k,
        values: [0; 4 + MAX_SEARCH_GATES],
        gates: Vec::with_capacity(k),
        readers: [0; 4 + MAX_SEARCH_GATES],
    };
    s.values[..4].copy_from_slice(&INPUTS);
    s.dfs()
}

struct Search {
    table: PartialTruthTable,
    k: usize,
    values: [u64; 4 + MAX_SEARCH_GATES],
    gates: Vec<Gate>,
    /// Times each node is read by a gate.
    readers: [u8; 4 + MAX_SEARCH_GATES],
}

impl Search {
    fn dfs(&mut self) -> Option<Circuit> {
        let placed = self.gates.len();
        let nodes = 4 + placed;
        if placed == self.k {
            return self.pick_outputs();
        }
        let remaining_after = self.k - placed - 1;
        for b in 1..nodes {
            for a in 0..b {
                for kind in GateKind::ALL {
                    let v = kind.eval(self.values[a], self.values[b]) & ALL_ROWS;
                    if self.values[..nodes].contains(&v) {
                        continue;
                    }
                    if placed > 0 {
                        let prev = nodes - 1;
                        if a != prev && b != prev && v < self.values[prev] {
                            continue;
                        }
                    }
                    self.values[nodes] = v;
                    self.readers[a] += 1;
                    self.readers[b] += 1;
                    self.readers[nodes] = 0;
                    self.gates.push(Gate { kind, a, b });
                    let unread = (4..=nodes).filter(|&i| self.readers[i] == 0).count();
                    if unread <= 2 * remaining_after + 2 {
                        if let Some(c) = self.dfs() {
                            return Some(c);
                        }
                    }
                    self.gates.pop();
                    self.readers[a] -= 1;
                    self.readers[b] -= 1;
                }
            }
        }
        None
    }

    fn pick_outputs(&self) -> Option<Circuit> {
        let nodes = 4 + self.gates.len();
        let unread: Vec<usize> = (4..nodes).filter(|&i| self.readers[i] == 0).collect();
        if unread.len() > 2 {
            return None;
        }
        for m in 0..nodes {
            if !self.table.mag.accepts(self.values[m]) {
                continue;
            }
            for s in 0..nodes {
                if !self.table.sgn.accepts(self.values[s]) {
                    continue;
                }
                if unread.iter().all(|&u| u == m || u == s) {
                    return Some(Circuit { gates: self.gates.clone(), mag_out: m, sgn_out: s });
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_examples() {
        let add = build_partial_table(FieldOp::Add);
        assert_eq!(add.entry([1, 0, 1, 1]), (Some(false), None));
        assert_eq!(add.entry([1, 0, 1, 0]), (Some(true), Some(true)));
        let mul = build_partial_table(FieldOp::Mul);
        assert_eq!(mul.entry([1, 1, 1, 1]), (Some(true), Some(false)));
        let div = build_partial_table(FieldOp::Div);
        assert_eq!(div.entry([1, 0, 0, 1]), (None, None));
        assert_eq!(div.mag.care.count_ones(), 8);
    }

    #[test]
    fn add_table_shape() {
        // Zero results: 0+0 four ways, 1+(-1), (-1)+1.
        let add = build_partial_table(FieldOp::Add);
        assert_eq!(add.mag.care, 0xffff);
        assert_eq!(add.sgn.care.count_ones(), 10);
    }

    #[test]
    fn reference_circuits_verify() {
        for op in FieldOp::ALL {
            let c = reference_circuit(op);
            assert!(verify_circuit(&c, &build_partial_table(op)), "{op}");
        }
        assert_eq!(reference_circuit(FieldOp::Add).gate_count(), 6);
        assert_eq!(reference_circuit(FieldOp::Sub).gate_count(), 6);
        assert_eq!(reference_circuit(FieldOp::Mul).gate_count(), 2);
        assert_eq!(reference_circuit(FieldOp::Div).gate_count(), 1);
    }

    #[test]
    fn reference_circuits_match_word_kernels() {
        use crate::f3::{add_words, sub_words};
        let inputs = [0x0123_4567_89ab_cdef, 0xfedc_ba98_7654_3210, 0xdead_beef_0bad_f00d, 0x1357_9bdf_2468_ace0];
        let [m1, s1, m2, s2] = inputs;
        assert_eq!(reference_circuit(FieldOp::Add).eval_words(inputs), add_words(m1, s1, m2, s2));
        assert_eq!(reference_circuit(FieldOp::Sub).eval_words(inputs), sub_words(m1, s1, m2, s2));
    }

    #[test]
    fn empty_circuit_fails_add() {
        let c = Circuit::new(vec![], 0, 1).unwrap();
        assert!(!verify_circuit(&c, &build_partial_table(FieldOp::Add)));
    }

    #[test]
    fn small_searches() {
        let mul = search_min_circuit(&build_partial_table(FieldOp::Mul), 4).unwrap().unwrap();
        assert_eq!(mul.gate_count(), 2);
        let div = search_min_circuit(&build_partial_table(FieldOp::Div), 4).unwrap().unwrap();
        assert_eq!(div.gate_count(), 1);
        assert!(search_min_circuit(&build_partial_table(FieldOp::Add), 2).unwrap().is_none());
        assert!(search_min_circuit(&build_partial_table(FieldOp::Add), 9).is_err());
    }

    #[test]
    fn circuit_rejects_forward_reference() {
        let g = Gate { kind: GateKind::And, a: 0, b: 4 };
        assert!(Circuit::new(vec![g], 0, 0).is_err());
        assert!(Circuit::new(vec![], 4, 0).is_err());
    }

    #[test]
    fn display_form() {
        let text = reference_circuit(FieldOp::Mul).to_string();
        assert_eq!(text, "g0 = mag1 & mag2\ng1 = sgn1 ^ sgn2\nmag = g0\nsgn = g1");
    }
}
