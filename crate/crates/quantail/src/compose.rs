//! Composition module: generate and evaluate valid postfix equations over
//! compatible premise quantities that justify a hypothesis quantity.
//!
//! The constraint system is realized as exact constrained enumeration with
//! pruning: instance sizes are small enough that exhaustive search over the
//! constrained space is cheap. Definitional, syntactic, and operand-access
//! constraints guarantee mathematical validity; type- and operator-
//! consistency constraints add linguistic validity. A standalone sequence
//! validator re-checks complete equations from scratch via the depth-equality
//! operand-access formulation and backs the oracle tests.

use std::collections::BTreeSet;

use num::One;

use crate::interval::{Interval, SetOutcome};
use crate::lexicon::LexiconSet;
use crate::numset::NumSet;
use crate::prune::unit_classes;
use crate::value::Num;

/// The nine operators. Symbol-list order puts the comparison operators last,
/// so inner positions range over the first seven only.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operator {
    Add,
    Sub,
    Mul,
    Div,
    Intersect,
    Union,
    SetMinus,
    Eq,
    Subset,
}

pub const OPERATORS: [Operator; 9] = [
    Operator::Add,
    Operator::Sub,
    Operator::Mul,
    Operator::Div,
    Operator::Intersect,
    Operator::Union,
    Operator::SetMinus,
    Operator::Eq,
    Operator::Subset,
];

impl Operator {
    pub fn symbol(&self) -> &'static str {
        match self {
            Operator::Add => "+",
            Operator::Sub => "-",
            Operator::Mul => "*",
            Operator::Div => "/",
            Operator::Intersect => "∩",
            Operator::Union => "∪",
            Operator::SetMinus => "∖",
            Operator::Eq => "=",
            Operator::Subset => "⊆",
        }
    }

    fn is_comparison(&self) -> bool {
        matches!(self, Operator::Eq | Operator::Subset)
    }
}

/// One operand symbol: a concrete value with its unit-type class. Operands
/// whose quantity recurs ("8 hours a day", "6 apples each") are rates;
/// multiplication requires exactly one rate operand.
#[derive(Clone, Debug)]
pub struct Operand {
    pub value: Interval,
    pub type_index: usize,
    pub is_rate: bool,
    pub label: String,
}

/// Symbol list layout: single-valued premise quantities, then range-valued
/// premise quantities, then the hypothesis quantity, then the operators.
#[derive(Clone, Debug)]
pub struct SymbolList {
    pub singles: Vec<Operand>,
    pub ranges: Vec<Operand>,
    pub hyp: Operand,
}

impl SymbolList {
    /// K: index of the first range quantity.
    pub fn first_range_index(&self) -> usize {
        self.singles.len()
    }

    /// M: index of the first operator.
    pub fn first_operator_index(&self) -> usize {
        self.singles.len() + self.ranges.len() + 1
    }

    /// N: total number of symbols.
    pub fn symbol_count(&self) -> usize {
        self.first_operator_index() + OPERATORS.len()
    }

    pub fn hyp_index(&self) -> usize {
        self.first_operator_index() - 1
    }

    pub fn operand(&self, idx: usize) -> &Operand {
        let k = self.first_range_index();
        let m = self.first_operator_index();
        if idx < k {
            &self.singles[idx]
        } else if idx < m - 1 {
            &self.ranges[idx - k]
        } else if idx == m - 1 {
            &self.hyp
        } else {
            panic!("not an operand index: {idx}")
        }
    }

    pub fn operator(&self, idx: usize) -> Operator {
        OPERATORS[idx - self.first_operator_index()]
    }

    pub fn is_operand(&self, idx: usize) -> bool {
        idx < self.first_operator_index()
    }

    pub fn symbol_label(&self, idx: usize) -> String {
        if self.is_operand(idx) {
            self.operand(idx).label.clone()
        } else {
            self.operator(idx).symbol().to_string()
        }
    }
}

/// Per-position class: exactly one of single / range / operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymbolClass {
    Single,
    Range,
    Operator,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    /// Symbol index assigned to each postfix position.
    pub postfix: Vec<usize>,
    pub classes: Vec<SymbolClass>,
    /// Stack-depth variable per position: d_0 = 0, d_i = d_{i-1} - 2*o_i + 1.
    pub depths: Vec<i64>,
    /// Feasible unit-type indices per position (singleton for operands).
    pub type_sets: Vec<BTreeSet<usize>>,
}

impl Equation {
    pub fn len(&self) -> usize {
        self.postfix.len()
    }

    pub fn is_empty(&self) -> bool {
        self.postfix.is_empty()
    }

    /// Space-separated postfix rendering, e.g. "P1 P2 - H1 =".
    pub fn render(&self, sl: &SymbolList) -> String {
        self.postfix
            .iter()
            .map(|&idx| sl.symbol_label(idx))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquationOutcome {
    Justified,
    Unjustified,
    Invalid,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    Single,
    Range,
}

fn value_shape(iv: &Interval) -> Shape {
    if iv.is_degenerate() {
        Shape::Single
    } else {
        Shape::Range
    }
}

/// Operand shapes an operator accepts, and the shape it produces.
/// Comparison operators produce no value (they end the equation).
fn shapes_ok(op: Operator, a: Shape, b: Shape) -> bool {
    match op {
        Operator::Add | Operator::Sub | Operator::Mul | Operator::Div | Operator::Eq => {
            a == Shape::Single && b == Shape::Single
        }
        Operator::Intersect | Operator::Union | Operator::SetMinus => {
            a == Shape::Range && b == Shape::Range
        }
        Operator::Subset => b == Shape::Range,
    }
}

fn result_shape(op: Operator) -> Shape {
    match op {
        Operator::Intersect | Operator::Union | Operator::SetMinus => Shape::Range,
        _ => Shape::Single,
    }
}

#[derive(Clone, Debug)]
struct Frame {
    shape: Shape,
    types: BTreeSet<usize>,
    /// Leaf quantity marked by a recurrence phrase ("8 hours a day").
    rate: bool,
    /// Computed by division: a derived rate that may be compared against the
    /// hypothesis but never composed further.
    quotient: bool,
    /// Operator-nesting depth of this subtree (leaves count 1).
    nesting: usize,
}

impl Frame {
    fn leaf(operand: &Operand) -> Frame {
        Frame {
            shape: value_shape(&operand.value),
            types: BTreeSet::from([operand.type_index]),
            rate: operand.is_rate,
            quotient: false,
            nesting: 1,
        }
    }
}

/// Apply an operator to two operand frames, enforcing the operator- and
/// type-consistency constraints. Two-type-match operators need a common
/// type; `*` needs distinct operand types with exactly one rate operand and
/// takes the rate side's type; `/` needs distinct plain operand types and
/// takes the left one. Quotients are terminal: only the final comparison may
/// consume them.
fn combine(op: Operator, a: &Frame, b: &Frame) -> Option<Frame> {
    if !shapes_ok(op, a.shape, b.shape) {
        return None;
    }
    if !op.is_comparison() && (a.quotient || b.quotient) {
        return None;
    }
    let types: BTreeSet<usize> = match op {
        Operator::Mul => {
            if a.rate == b.rate {
                return None;
            }
            let (rate_types, plain_types) = if a.rate { (&a.types, &b.types) } else { (&b.types, &a.types) };
            rate_types
                .iter()
                .filter(|x| plain_types.iter().any(|y| y != *x))
                .copied()
                .collect()
        }
        Operator::Div => {
            if a.rate || b.rate {
                return None;
            }
            a.types
                .iter()
                .filter(|x| b.types.iter().any(|y| y != *x))
                .copied()
                .collect()
        }
        _ => a.types.intersection(&b.types).copied().collect(),
    };
    if types.is_empty() {
        return None;
    }
    Some(Frame {
        shape: result_shape(op),
        types,
        rate: !matches!(op, Operator::Mul | Operator::Div) && a.rate && b.rate,
        quotient: matches!(op, Operator::Div),
        nesting: a.nesting.max(b.nesting) + 1,
    })
}

/// Enumerate all constraint-satisfying postfix equations, in deterministic
/// order (shorter equations first, then lexicographic by symbol index), up to
/// `max_solutions`.
pub fn enumerate_equations(sl: &SymbolList, max_depth: usize, max_solutions: usize) -> Vec<Equation> {
    let mut out = Vec::new();
    if max_solutions == 0 || max_depth == 0 {
        return out;
    }
    let premise_count = sl.singles.len() + sl.ranges.len();
    if premise_count == 0 {
        return out;
    }
    let max_leaves = 1usize << (max_depth - 1);
    let l_max = 2 * max_leaves.min(premise_count) + 1;
    let mut lengths = Vec::new();
    let mut l = 3;
    while l <= l_max {
        lengths.push(l);
        l += 2;
    }
    for length in lengths {
        if out.len() >= max_solutions {
            break;
        }
        let mut used = vec![false; sl.first_operator_index() - 1];
        let mut stack: Vec<Frame> = Vec::new();
        let mut seq: Vec<usize> = Vec::new();
        dfs(sl, length, max_depth, max_solutions, &mut used, &mut stack, &mut seq, &mut out);
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    sl: &SymbolList,
    length: usize,
    max_depth: usize,
    max_solutions: usize,
    used: &mut Vec<bool>,
    stack: &mut Vec<Frame>,
    seq: &mut Vec<usize>,
    out: &mut Vec<Equation>,
) {
    if out.len() >= max_solutions {
        return;
    }
    let pos = seq.len();
    let m = sl.first_operator_index();
    let hyp_idx = sl.hyp_index();

    if pos == length - 1 {
        // Final position: comparison operator against the hypothesis.
        if stack.len() != 2 {
            return;
        }
        for op_offset in [7usize, 8usize] {
            let op = OPERATORS[op_offset];
            let a = &stack[0];
            let b = &stack[1];
            if combine(op, a, b).is_none() {
                continue;
            }
            if a.nesting > max_depth {
                continue;
            }
            seq.push(m + op_offset);
            if let Some(eq) = build_attributes(sl, seq) {
                out.push(eq);
            }
            seq.pop();
            if out.len() >= max_solutions {
                return;
            }
        }
        return;
    }

    if pos == length - 2 {
        // Forced: hypothesis operand.
        let frame = Frame::leaf(sl.operand(hyp_idx));
        // After pushing, the final comparison must see exactly two frames.
        if stack.len() != 1 {
            return;
        }
        seq.push(hyp_idx);
        stack.push(frame);
        dfs(sl, length, max_depth, max_solutions, used, stack, seq, out);
        stack.pop();
        seq.pop();
        return;
    }

    let rem_after = length - pos - 1;

    // Premise operands, ascending index.
    for idx in 0..(m - 1) {
        if used[idx] {
            continue;
        }
        let s_after = stack.len() + 1;
        // Reachability: remaining steps must bring the stack to 1 value
        // before the hypothesis push, i.e. 2 frames before the comparison.
        // Between here and position length-2 the net change must land on 1.
        let before_hyp = length - 2 - (pos + 1); // positions left for premise side
        let target = 1i64;
        let diff = s_after as i64 - target;
        if diff > before_hyp as i64 || (before_hyp as i64 - diff) % 2 != 0 {
            continue;
        }
        let pushes_needed = ((before_hyp as i64 - diff) / 2) as usize;
        let available: usize = (0..(m - 1)).filter(|&i| !used[i] && i != idx).count();
        if pushes_needed > available {
            continue;
        }
        used[idx] = true;
        seq.push(idx);
        stack.push(Frame::leaf(sl.operand(idx)));
        dfs(sl, length, max_depth, max_solutions, used, stack, seq, out);
        stack.pop();
        seq.pop();
        used[idx] = false;
        if out.len() >= max_solutions {
            return;
        }
    }

    // Inner operators (everything but = and ⊆), ascending index.
    if stack.len() >= 2 && rem_after >= 2 {
        for op_offset in 0..7usize {
            let op = OPERATORS[op_offset];
            let b = stack.last().unwrap();
            let a = &stack[stack.len() - 2];
            let combined = match combine(op, a, b) {
                Some(f) => f,
                None => continue,
            };
            if combined.nesting > max_depth {
                continue;
            }
            let b = stack.pop().unwrap();
            let a = stack.pop().unwrap();
            stack.push(combined);
            seq.push(m + op_offset);
            dfs(sl, length, max_depth, max_solutions, used, stack, seq, out);
            seq.pop();
            stack.pop();
            stack.push(a);
            stack.push(b);
            if out.len() >= max_solutions {
                return;
            }
        }
    }
}

/// Recompute per-position classes, stack depths, and type sets for a complete
/// sequence. Returns None if the sequence is structurally broken.
fn build_attributes(sl: &SymbolList, seq: &[usize]) -> Option<Equation> {
    let mut classes = Vec::with_capacity(seq.len());
    let mut depths = Vec::with_capacity(seq.len());
    let mut frame_stack: Vec<Frame> = Vec::new();
    let mut type_sets = Vec::with_capacity(seq.len());
    let mut d: i64 = 0;
    for (i, &idx) in seq.iter().enumerate() {
        let is_op = !sl.is_operand(idx);
        if i == 0 {
            d = 0;
        } else {
            d = d - 2 * (is_op as i64) + 1;
        }
        depths.push(d);
        if is_op {
            let op = sl.operator(idx);
            classes.push(SymbolClass::Operator);
            let b = frame_stack.pop()?;
            let a = frame_stack.pop()?;
            let f = combine(op, &a, &b)?;
            type_sets.push(f.types.clone());
            frame_stack.push(f);
        } else {
            let operand = sl.operand(idx);
            classes.push(match value_shape(&operand.value) {
                Shape::Single => SymbolClass::Single,
                Shape::Range => SymbolClass::Range,
            });
            let f = Frame::leaf(operand);
            type_sets.push(f.types.clone());
            frame_stack.push(f);
        }
    }
    Some(Equation { postfix: seq.to_vec(), classes, depths, type_sets })
}

/// Standalone validator: checks a complete symbol-index sequence against
/// every constraint family, locating operands through the depth-equality
/// rule (op2 at i-1; op1 at the largest l <= i-2 with d_l = d_i) rather than
/// by stack simulation.
pub fn validate_sequence(sl: &SymbolList, seq: &[usize], max_depth: usize) -> bool {
    let l = seq.len();
    if l < 3 || l % 2 == 0 {
        return false;
    }
    let m = sl.first_operator_index();
    let n = sl.symbol_count();
    let hyp_idx = sl.hyp_index();
    if seq.iter().any(|&x| x >= n) {
        return false;
    }

    let is_op: Vec<bool> = seq.iter().map(|&x| x >= m).collect();

    // Definitional: stack-depth variables.
    let mut depths = vec![0i64; l];
    for i in 1..l {
        depths[i] = depths[i - 1] - 2 * (is_op[i] as i64) + 1;
    }
    // Syntactic constraints.
    if is_op[0] || is_op[1] {
        return false;
    }
    if depths[l - 1] != 0 {
        return false;
    }
    if seq[l - 2] != hyp_idx {
        return false;
    }
    if !is_op[l - 1] || !sl.operator(seq[l - 1]).is_comparison() {
        return false;
    }
    for i in 0..l - 2 {
        if is_op[i] {
            if sl.operator(seq[i]).is_comparison() {
                return false;
            }
            // Operators need two values below them.
            if depths[i - 1] < 1 {
                return false;
            }
        } else if seq[i] == hyp_idx {
            return false;
        }
    }
    // Premise usage: operand symbols pairwise distinct.
    let operand_positions: Vec<usize> = (0..l).filter(|&i| !is_op[i]).collect();
    for (a_i, &a) in operand_positions.iter().enumerate() {
        for &b in &operand_positions[a_i + 1..] {
            if seq[a] == seq[b] {
                return false;
            }
        }
    }

    // Operand access: op2 root at i-1, op1 root at largest l' <= i-2 with
    // d_{l'} = d_i.
    let mut op1 = vec![usize::MAX; l];
    let mut op2 = vec![usize::MAX; l];
    for i in 0..l {
        if !is_op[i] {
            continue;
        }
        if i < 2 {
            return false;
        }
        op2[i] = i - 1;
        let mut found = usize::MAX;
        for cand in (0..=i - 2).rev() {
            if depths[cand] == depths[i] {
                found = cand;
                break;
            }
        }
        if found == usize::MAX {
            return false;
        }
        op1[i] = found;
    }

    // Shape, type, rate, and quotient propagation over the operand-access
    // links.
    let mut frames: Vec<Option<Frame>> = vec![None; l];
    for i in 0..l {
        if !is_op[i] {
            frames[i] = Some(Frame::leaf(sl.operand(seq[i])));
        } else {
            let op = sl.operator(seq[i]);
            let (a, b) = (op1[i], op2[i]);
            let combined = match (frames[a].as_ref(), frames[b].as_ref()) {
                (Some(x), Some(y)) => combine(op, x, y),
                _ => None,
            };
            match combined {
                Some(f) => frames[i] = Some(f),
                None => return false,
            }
        }
    }

    // Tree-depth limit on the premise-side expression.
    frames[op1[l - 1]].as_ref().map(|f| f.nesting).unwrap_or(usize::MAX) <= max_depth
}

/// Stack evaluation with interval operators. `Invalid` on division by zero,
/// non-interval set results, empty intermediate sets, and equations that
/// multiply or divide by 1.
pub fn evaluate(sl: &SymbolList, eq: &Equation) -> EquationOutcome {
    let mut stack: Vec<Interval> = Vec::new();
    let one = Num::one();
    for (i, &idx) in eq.postfix.iter().enumerate() {
        if sl.is_operand(idx) {
            stack.push(sl.operand(idx).value.clone());
            continue;
        }
        let op = sl.operator(idx);
        let b = match stack.pop() {
            Some(v) => v,
            None => return EquationOutcome::Invalid,
        };
        let a = match stack.pop() {
            Some(v) => v,
            None => return EquationOutcome::Invalid,
        };
        let last = i == eq.postfix.len() - 1;
        match op {
            Operator::Add => match a.add(&b) {
                Ok(v) => stack.push(v),
                Err(_) => return EquationOutcome::Invalid,
            },
            Operator::Sub => match a.sub(&b) {
                Ok(v) => stack.push(v),
                Err(_) => return EquationOutcome::Invalid,
            },
            Operator::Mul => {
                let one_operand = a.point_value() == Some(&one) || b.point_value() == Some(&one);
                if one_operand {
                    return EquationOutcome::Invalid;
                }
                match a.mul(&b) {
                    Ok(v) => stack.push(v),
                    Err(_) => return EquationOutcome::Invalid,
                }
            }
            Operator::Div => {
                if b.point_value() == Some(&one) {
                    return EquationOutcome::Invalid;
                }
                match a.div(&b) {
                    Ok(v) => stack.push(v),
                    Err(_) => return EquationOutcome::Invalid,
                }
            }
            Operator::Intersect => match a.intersect(&b) {
                SetOutcome::Interval(v) => stack.push(v),
                _ => return EquationOutcome::Invalid,
            },
            Operator::Union => match a.union(&b) {
                SetOutcome::Interval(v) => stack.push(v),
                _ => return EquationOutcome::Invalid,
            },
            Operator::SetMinus => match a.setminus(&b) {
                SetOutcome::Interval(v) => stack.push(v),
                _ => return EquationOutcome::Invalid,
            },
            Operator::Eq => {
                if !last {
                    return EquationOutcome::Invalid;
                }
                return if a == b {
                    EquationOutcome::Justified
                } else {
                    EquationOutcome::Unjustified
                };
            }
            Operator::Subset => {
                if !last {
                    return EquationOutcome::Invalid;
                }
                return if a.is_subset_of(&b) {
                    EquationOutcome::Justified
                } else {
                    EquationOutcome::Unjustified
                };
            }
        }
    }
    EquationOutcome::Invalid
}

/// Build a symbol list for one hypothesis quantity over premise quantities.
/// Type indices come from the pruner's unit-compatibility classes.
pub fn build_symbol_list(hyp: &NumSet, premises: &[NumSet], lex: &LexiconSet) -> SymbolList {
    let mut all: Vec<&NumSet> = premises.iter().collect();
    all.push(hyp);
    let classes = unit_classes(&all, lex);
    let mut singles = Vec::new();
    let mut ranges = Vec::new();
    for (i, p) in premises.iter().enumerate() {
        let operand = Operand {
            value: p.val.clone(),
            type_index: classes[i],
            is_rate: !p.freq.is_empty(),
            label: format!("P{}", i + 1),
        };
        if p.val.is_degenerate() {
            singles.push(operand);
        } else {
            ranges.push(operand);
        }
    }
    let hyp_operand = Operand {
        value: hyp.val.clone(),
        type_index: classes[premises.len()],
        is_rate: !hyp.freq.is_empty(),
        label: "H1".to_string(),
    };
    SymbolList { singles, ranges, hyp: hyp_operand }
}

pub struct JustifyResult {
    pub symbols: SymbolList,
    /// Structurally valid equations whose evaluation justified the hypothesis.
    pub equations: Vec<Equation>,
}

/// All equations (up to the enumeration cap) that evaluate to justified.
pub fn justify(
    hyp: &NumSet,
    premises: &[NumSet],
    lex: &LexiconSet,
    max_depth: usize,
    max_solutions: usize,
) -> JustifyResult {
    let symbols = build_symbol_list(hyp, premises, lex);
    let candidates = enumerate_equations(&symbols, max_depth, max_solutions);
    let equations = candidates
        .into_iter()
        .filter(|eq| evaluate(&symbols, eq) == EquationOutcome::Justified)
        .collect();
    JustifyResult { symbols, equations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::num_from_i64 as num;

    fn operand(v: Interval, t: usize, label: &str) -> Operand {
        Operand { value: v, type_index: t, is_rate: false, label: label.to_string() }
    }

    fn rate_operand(v: Interval, t: usize, label: &str) -> Operand {
        Operand { value: v, type_index: t, is_rate: true, label: label.to_string() }
    }

    fn point(v: i64) -> Interval {
        Interval::point(num(v))
    }

    fn sl(singles: Vec<Operand>, ranges: Vec<Operand>, hyp: Operand) -> SymbolList {
        SymbolList { singles, ranges, hyp }
    }

    fn renderings(sl: &SymbolList, eqs: &[Equation]) -> Vec<String> {
        eqs.iter().map(|e| e.render(sl)).collect()
    }

    #[test]
    fn apples_example() {
        let s = sl(
            vec![operand(point(3), 0, "P1"), operand(point(1), 0, "P2")],
            vec![],
            operand(point(2), 0, "H1"),
        );
        let eqs = enumerate_equations(&s, 3, 50);
        let all = renderings(&s, &eqs);
        assert!(all.contains(&"P1 P2 - H1 =".to_string()), "got: {all:?}");
        let justified: Vec<String> = eqs
            .iter()
            .filter(|e| evaluate(&s, e) == EquationOutcome::Justified)
            .map(|e| e.render(&s))
            .collect();
        assert_eq!(justified, vec!["P1 P2 - H1 =".to_string()]);
    }

    #[test]
    fn direct_equality() {
        let s = sl(vec![operand(point(5), 0, "P1")], vec![], operand(point(5), 0, "H1"));
        let eqs = enumerate_equations(&s, 3, 50);
        let all = renderings(&s, &eqs);
        assert_eq!(all, vec!["P1 H1 =".to_string()]);
        assert_eq!(evaluate(&s, &eqs[0]), EquationOutcome::Justified);
    }

    #[test]
    fn point_in_range_subset() {
        let s = sl(
            vec![operand(point(100), 0, "P1")],
            vec![],
            operand(Interval::less_than(num(700)), 0, "H1"),
        );
        let eqs = enumerate_equations(&s, 3, 50);
        let all = renderings(&s, &eqs);
        assert_eq!(all, vec!["P1 H1 ⊆".to_string()]);
        assert_eq!(evaluate(&s, &eqs[0]), EquationOutcome::Justified);
    }

    #[test]
    fn lambs_subtraction() {
        let s = sl(
            vec![operand(point(6048), 0, "P1"), operand(point(193), 0, "P2")],
            vec![],
            operand(point(5855), 0, "H1"),
        );
        let j: Vec<String> = enumerate_equations(&s, 3, 50)
            .into_iter()
            .filter(|e| evaluate(&s, e) == EquationOutcome::Justified)
            .map(|e| e.render(&s))
            .collect();
        assert_eq!(j, vec!["P1 P2 - H1 =".to_string()]);
    }

    #[test]
    fn unjustified_but_valid() {
        let s = sl(
            vec![operand(point(3), 0, "P1"), operand(point(1), 0, "P2")],
            vec![],
            operand(point(5), 0, "H1"),
        );
        let eqs = enumerate_equations(&s, 3, 50);
        let sub = eqs.iter().find(|e| e.render(&s) == "P1 P2 - H1 =").unwrap();
        assert_eq!(evaluate(&s, sub), EquationOutcome::Unjustified);
        let add = eqs.iter().find(|e| e.render(&s) == "P1 P2 + H1 =").unwrap();
        assert_eq!(evaluate(&s, add), EquationOutcome::Unjustified);
    }

    #[test]
    fn multiplication_needs_distinct_types_and_a_rate() {
        // 4 boxes x 6 apples-each: the rate operand types the result.
        let s = sl(
            vec![operand(point(4), 0, "P1"), rate_operand(point(6), 1, "P2")],
            vec![],
            operand(point(24), 1, "H1"),
        );
        let j: Vec<String> = {
            let eqs = enumerate_equations(&s, 3, 50);
            eqs.iter()
                .filter(|e| evaluate(&s, e) == EquationOutcome::Justified)
                .map(|e| e.render(&s))
                .collect()
        };
        assert!(j.contains(&"P1 P2 * H1 =".to_string()), "got {j:?}");

        // Same types: multiplication is excluded.
        let same = sl(
            vec![operand(point(4), 0, "P1"), rate_operand(point(6), 0, "P2")],
            vec![],
            operand(point(24), 0, "H1"),
        );
        let eqs = enumerate_equations(&same, 3, 50);
        assert!(!renderings(&same, &eqs).iter().any(|r| r.contains('*')));

        // No rate operand: products are not generated.
        let plain = sl(
            vec![operand(point(4), 0, "P1"), operand(point(6), 1, "P2")],
            vec![],
            operand(point(24), 1, "H1"),
        );
        let eqs = enumerate_equations(&plain, 3, 50);
        assert!(!renderings(&plain, &eqs).iter().any(|r| r.contains('*')));

        // The product cannot take the plain operand's type.
        let wrong_type = sl(
            vec![operand(point(4), 0, "P1"), rate_operand(point(6), 1, "P2")],
            vec![],
            operand(point(24), 0, "H1"),
        );
        let eqs = enumerate_equations(&wrong_type, 3, 50);
        assert!(!renderings(&wrong_type, &eqs).iter().any(|r| r.contains('*')));
    }

    #[test]
    fn division_takes_left_type() {
        // 120 miles / 3 hours justifies 40 miles; 3 hours / 120 miles cannot
        // justify a miles-typed hypothesis.
        let s = sl(
            vec![operand(point(120), 0, "P1"), operand(point(3), 1, "P2")],
            vec![],
            operand(point(40), 0, "H1"),
        );
        let j: Vec<String> = {
            let eqs = enumerate_equations(&s, 3, 50);
            eqs.iter()
                .filter(|e| evaluate(&s, e) == EquationOutcome::Justified)
                .map(|e| e.render(&s))
                .collect()
        };
        assert_eq!(j, vec!["P1 P2 / H1 =".to_string()]);
    }

    #[test]
    fn division_by_zero_and_one_discarded() {
        let s = sl(
            vec![operand(point(8), 0, "P1"), operand(point(0), 1, "P2")],
            vec![],
            operand(point(8), 0, "H1"),
        );
        let eqs = enumerate_equations(&s, 3, 50);
        let div = eqs.iter().find(|e| e.render(&s) == "P1 P2 / H1 =").unwrap();
        assert_eq!(evaluate(&s, div), EquationOutcome::Invalid);

        let s1 = sl(
            vec![operand(point(8), 0, "P1"), operand(point(1), 1, "P2")],
            vec![],
            operand(point(8), 0, "H1"),
        );
        let eqs = enumerate_equations(&s1, 3, 50);
        for e in &eqs {
            let r = e.render(&s1);
            if r.contains('*') || r.contains('/') {
                assert_eq!(evaluate(&s1, e), EquationOutcome::Invalid, "{r}");
            }
        }
    }

    #[test]
    fn range_operators_need_ranges() {
        let r1 = Interval::closed(num(1), num(5)).unwrap();
        let r2 = Interval::closed(num(3), num(7)).unwrap();
        let h = Interval::closed(num(2), num(6)).unwrap();
        let s = sl(
            vec![],
            vec![operand(r1, 0, "P1"), operand(r2, 0, "P2")],
            operand(h, 0, "H1"),
        );
        let eqs = enumerate_equations(&s, 3, 50);
        let all = renderings(&s, &eqs);
        assert!(all.contains(&"P1 P2 ∩ H1 ⊆".to_string()), "got {all:?}");
        assert!(!all.iter().any(|r| r.contains('+')));
        let inter = eqs.iter().find(|e| e.render(&s) == "P1 P2 ∩ H1 ⊆").unwrap();
        // [1,5] ∩ [3,7] = [3,5] ⊆ [2,6].
        assert_eq!(evaluate(&s, inter), EquationOutcome::Justified);
    }

    #[test]
    fn determinism_and_ordering() {
        let s = sl(
            vec![
                operand(point(3), 0, "P1"),
                operand(point(1), 0, "P2"),
                operand(point(4), 0, "P3"),
            ],
            vec![],
            operand(point(2), 0, "H1"),
        );
        let a = enumerate_equations(&s, 3, 50);
        let b = enumerate_equations(&s, 3, 50);
        assert_eq!(a, b);
        // Shorter equations come first; within a length, lexicographic.
        for w in a.windows(2) {
            assert!(
                w[0].len() < w[1].len() || (w[0].len() == w[1].len() && w[0].postfix <= w[1].postfix)
            );
        }
        // Truncation is a prefix of the full ordering.
        let capped = enumerate_equations(&s, 3, 5);
        assert_eq!(capped[..], a[..5]);
    }

    #[test]
    fn removing_premises_never_adds_equations() {
        let s_full = sl(
            vec![
                operand(point(3), 0, "P1"),
                operand(point(1), 0, "P2"),
                operand(point(4), 0, "P3"),
            ],
            vec![],
            operand(point(2), 0, "H1"),
        );
        let s_small = sl(
            vec![operand(point(3), 0, "P1"), operand(point(1), 0, "P2")],
            vec![],
            operand(point(2), 0, "H1"),
        );
        let full: std::collections::BTreeSet<String> =
            renderings(&s_full, &enumerate_equations(&s_full, 3, 1000)).into_iter().collect();
        let small: std::collections::BTreeSet<String> =
            renderings(&s_small, &enumerate_equations(&s_small, 3, 1000)).into_iter().collect();
        assert!(small.is_subset(&full));
    }

    #[test]
    fn enumerated_sequences_pass_standalone_validator() {
        let s = sl(
            vec![operand(point(3), 0, "P1"), operand(point(1), 0, "P2")],
            vec![operand(Interval::closed(num(1), num(9)).unwrap(), 0, "P3")],
            operand(point(2), 0, "H1"),
        );
        let eqs = enumerate_equations(&s, 3, 1000);
        assert!(!eqs.is_empty());
        for e in &eqs {
            assert!(validate_sequence(&s, &e.postfix, 3), "{}", e.render(&s));
        }
    }

    #[test]
    fn justify_end_to_end() {
        use crate::numset::Source;
        let lex = LexiconSet::embedded();
        let mk = |unit: &str, v: Interval, source| crate::prune::tests::numset(unit, v, source);
        let hyp = mk("apples", point(2), Source::Hypothesis);
        let premises = vec![
            mk("apples", point(3), Source::Premise),
            mk("apples", point(1), Source::Premise),
        ];
        let result = justify(&hyp, &premises, &lex, 3, 50);
        assert_eq!(result.equations.len(), 1);
        assert_eq!(result.equations[0].render(&result.symbols), "P1 P2 - H1 =");

        let empty = justify(&hyp, &[], &lex, 3, 50);
        assert!(empty.equations.is_empty());
    }

    #[test]
    fn equation_attribute_conventions() {
        let s = sl(
            vec![operand(point(3), 0, "P1"), operand(point(1), 0, "P2")],
            vec![],
            operand(point(2), 0, "H1"),
        );
        let eqs = enumerate_equations(&s, 3, 50);
        let e = eqs.iter().find(|e| e.render(&s) == "P1 P2 - H1 =").unwrap();
        assert_eq!(e.depths, vec![0, 1, 0, 1, 0]);
        assert_eq!(
            e.classes,
            vec![
                SymbolClass::Single,
                SymbolClass::Single,
                SymbolClass::Operator,
                SymbolClass::Single,
                SymbolClass::Operator
            ]
        );
    }
}
