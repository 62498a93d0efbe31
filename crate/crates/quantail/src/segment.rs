//! Quantity segmentation: locate quantity mentions in a sentence and
//! normalize their numeric content into intervals.
//!
//! The least-ancestor-noun-phrase rule is approximated by a token window:
//! a cardinal cluster (digits, written numbers, magnitude words, explicit
//! ranges) grown leftward over approximators, currency symbols, and bound
//! phrases. Temporal expressions (clock times, standalone years, month-day
//! forms) are excluded.

use thiserror::Error;

use crate::interval::Interval;
use crate::lexicon::LexiconSet;
use crate::numset::CharSpan;
use crate::text::{is_digit_token, tokenize, Token};
use crate::value::{parse_decimal, Num};
use crate::words;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundMarker {
    LessThan,
    MoreThan,
    AtLeast,
    AtMost,
    Exact,
}

#[derive(Clone, Debug)]
pub struct QuantityMention {
    /// Byte range in the source sentence.
    pub span: CharSpan,
    /// The mention's tokens, in order.
    pub tokens: Vec<Token>,
    /// Sentence-token index range `[start, end)` of the mention window.
    pub token_range: (usize, usize),
    /// Sentence-token indices of the value-bearing tokens.
    pub cardinal_positions: Vec<usize>,
    pub raw_value: Interval,
    pub bound_marker: Option<BoundMarker>,
    pub range_marker: bool,
    /// Value arose from a ratio construction (half, quarter, "1 in 4").
    pub ratio: bool,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NormalizeError {
    #[error("no number grammar rule applies")]
    UnparseableNumber,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum NumKind {
    Digit,
    Word,
    Ratio,
}

fn numeric_value(text: &str, lex: &LexiconSet) -> Option<(Num, NumKind)> {
    if is_digit_token(text) {
        return parse_decimal(text).map(|v| (v, NumKind::Digit));
    }
    // Attached magnitude suffix: 374m, 40k, 1.5bn.
    if text.starts_with(|c: char| c.is_ascii_digit()) {
        if let Some(split) = text.find(|c: char| c.is_ascii_alphabetic()) {
            let (digits, suffix) = text.split_at(split);
            if is_digit_token(digits) {
                if let Some(mult) = lex.magnitude_suffix(suffix) {
                    return parse_decimal(digits).map(|v| (v * mult, NumKind::Digit));
                }
                // Digit ordinals: 40th, 3rd, 2nd, 1st.
                if matches!(suffix, "st" | "nd" | "rd" | "th") {
                    return parse_decimal(digits).map(|v| (v, NumKind::Digit));
                }
            }
        }
        return None;
    }
    if let Some(v) = lex.number_word(text) {
        let kind = if v.is_integer() { NumKind::Word } else { NumKind::Ratio };
        return Some((v.clone(), kind));
    }
    None
}

fn is_clock_like(text: &str) -> bool {
    if let Some((h, m)) = text.split_once(':') {
        return !h.is_empty()
            && h.chars().all(|c| c.is_ascii_digit())
            && m.len() == 2
            && m.chars().all(|c| c.is_ascii_digit());
    }
    false
}

fn year_value(text: &str) -> Option<i64> {
    if text.len() == 4 && text.chars().all(|c| c.is_ascii_digit()) {
        let y: i64 = text.parse().ok()?;
        if (1900..=2099).contains(&y) {
            return Some(y);
        }
    }
    None
}

/// Mark tokens covered by temporal expressions: clock times, month-day forms,
/// and standalone years (1900-2099) in temporal context.
fn temporal_mask(lower: &[String], lex: &LexiconSet) -> Vec<bool> {
    let n = lower.len();
    let mut mask = vec![false; n];
    for i in 0..n {
        let t = &lower[i];
        if is_clock_like(t) {
            mask[i] = true;
            if i + 1 < n && matches!(lower[i + 1].as_str(), "am" | "pm") {
                mask[i + 1] = true;
            }
            continue;
        }
        let next_month = i + 1 < n && words::is_month(&lower[i + 1]);
        let prev_month = i > 0 && words::is_month(&lower[i - 1]);
        let short_numeral = t.chars().all(|c| c.is_ascii_digit()) && t.len() <= 2
            || (t.len() <= 4
                && (t.ends_with("st") || t.ends_with("nd") || t.ends_with("rd") || t.ends_with("th"))
                && t.chars().take(t.len() - 2).all(|c| c.is_ascii_digit()));
        if (prev_month || next_month) && (short_numeral || year_value(t).is_some()) {
            mask[i] = true;
            continue;
        }
        if year_value(t).is_some() {
            let prev = i.checked_sub(1).map(|p| lower[p].as_str());
            let next = lower.get(i + 1).map(|s| s.as_str());
            let prev_temporal = prev.is_some_and(|p| words::TEMPORAL_PREPS.contains(&p));
            let boundary_start = prev.is_none_or(crate::text::is_punctuation);
            let next_nounish = next.is_some_and(|nx| {
                words::is_nounish(nx) || lex.is_known_unit(nx) || lex.is_person_type(nx)
            });
            if prev_temporal || (boundary_start && !next_nounish) {
                mask[i] = true;
            }
        }
    }
    mask
}

/// Start index of a bound phrase ending just before `end` (exclusive),
/// longest match first.
fn bound_ending_at(lower: &[String], end: usize) -> Option<usize> {
    for len in (1..=3usize).rev() {
        if end >= len && bound_prefix_at(lower, end - len).map(|(_, l)| l) == Some(len) {
            return Some(end - len);
        }
    }
    None
}

const CURRENCY_TOKENS: &[&str] = &["$", "£", "€", "¥"];

/// Locate quantity mentions, in order of appearance, non-overlapping.
/// Sentences without quantities yield an empty list.
pub fn segment(sentence: &str, lex: &LexiconSet) -> Vec<QuantityMention> {
    segment_with_diagnostics(sentence, lex).0
}

pub fn segment_with_diagnostics(sentence: &str, lex: &LexiconSet) -> (Vec<QuantityMention>, Vec<String>) {
    let tokens = tokenize(sentence);
    let lower: Vec<String> = tokens.iter().map(|t| t.lower()).collect();
    let n = tokens.len();
    let temporal = temporal_mask(&lower, lex);
    let mut mentions = Vec::new();
    let mut diagnostics = Vec::new();

    let numeric: Vec<Option<(Num, NumKind)>> =
        lower.iter().map(|t| numeric_value(t, lex)).collect();

    let mut i = 0;
    while i < n {
        if temporal[i] || numeric[i].is_none() {
            i += 1;
            continue;
        }

        let core_start = i;
        let mut cards = vec![i];
        let mut end = i + 1;
        let from_before = core_start > 0 && lower[core_start - 1] == "from";
        let between_before = core_start > 0 && lower[core_start - 1] == "between";
        let mut saw_range = false;
        let mut saw_ratio_sep = false;

        // Grow rightward over the cardinal cluster.
        while end < n {
            let t = lower[end].as_str();
            if let Some((_, kind)) = &numeric[end] {
                if temporal[end] {
                    break;
                }
                let prev_kind = numeric[*cards.last().unwrap()].as_ref().unwrap().1;
                // Adjacent digit tokens are separate mentions; words chain on,
                // and a ratio word may close a count ("three quarters").
                let chains = match (prev_kind, kind) {
                    (NumKind::Digit, NumKind::Digit) => false,
                    (NumKind::Ratio, _) => false,
                    _ => *cards.last().unwrap() + 1 == end,
                };
                if chains {
                    cards.push(end);
                    end += 1;
                    continue;
                }
                break;
            }
            let next_numeric = end + 1 < n && numeric[end + 1].is_some() && !temporal[end + 1];
            if t == "and" && between_before && next_numeric && !saw_range {
                saw_range = true;
                cards.push(end + 1);
                end += 2;
                continue;
            }
            if t == "to" && !from_before && !between_before && next_numeric && !saw_range && !saw_ratio_sep {
                saw_range = true;
                cards.push(end + 1);
                end += 2;
                continue;
            }
            if t == "in" && next_numeric && cards.len() == 1 && !saw_range {
                saw_ratio_sep = true;
                cards.push(end + 1);
                end += 2;
                continue;
            }
            break;
        }

        // Grow leftward over between/bounds/approximators/currency.
        let mut start = core_start;
        if between_before {
            start = core_start - 1;
        }
        loop {
            let mut moved = false;
            if start > 0 && CURRENCY_TOKENS.contains(&lower[start - 1].as_str()) {
                start -= 1;
                moved = true;
            }
            if !moved {
                // Approximator word or phrase ending right before `start`.
                for len in 1..=4usize {
                    if start >= len {
                        if let Some(l) = lex.approximator_len_at(&lower, start - len) {
                            if l == len {
                                start -= len;
                                moved = true;
                                break;
                            }
                        }
                    }
                }
            }
            if !moved {
                if let Some(s) = bound_ending_at(&lower, start) {
                    start = s;
                    moved = true;
                }
            }
            if !moved {
                break;
            }
        }

        let window: Vec<String> = lower[start..end].to_vec();
        match normalize_tokens(&window, lex) {
            Ok(norm) => {
                let span = CharSpan { start: tokens[start].start, end: tokens[end - 1].end };
                mentions.push(QuantityMention {
                    span,
                    tokens: tokens[start..end].to_vec(),
                    token_range: (start, end),
                    cardinal_positions: cards,
                    raw_value: norm.value,
                    bound_marker: norm.bound,
                    range_marker: norm.range,
                    ratio: norm.ratio,
                });
            }
            Err(e) => {
                diagnostics.push(format!(
                    "dropped mention '{}': {}",
                    window.join(" "),
                    e
                ));
            }
        }
        i = end;
    }
    (mentions, diagnostics)
}

pub struct Normalized {
    pub value: Interval,
    pub bound: Option<BoundMarker>,
    pub range: bool,
    pub ratio: bool,
}

/// Normalize a token sequence into an interval: comma removal, written-number
/// composition, magnitude suffixes, simple ratios, bound markers, and
/// explicit to/between ranges. Trailing non-numeric context is ignored.
pub fn normalize_number(tokens: &[&str], lex: &LexiconSet) -> Result<Interval, NormalizeError> {
    let lower: Vec<String> = tokens.iter().map(|t| t.to_lowercase()).collect();
    normalize_tokens(&lower, lex).map(|n| n.value)
}

fn normalize_tokens(lower: &[String], lex: &LexiconSet) -> Result<Normalized, NormalizeError> {
    let mut bound: Option<BoundMarker> = None;
    let mut between = false;
    let mut groups: Vec<Vec<(Num, NumKind)>> = Vec::new();
    let mut current: Vec<(Num, NumKind)> = Vec::new();
    let mut range = false;
    let mut ratio_sep = false;

    let mut i = 0;
    while i < lower.len() {
        let t = lower[i].as_str();
        if let Some((v, kind)) = numeric_value(t, lex) {
            current.push((v, kind));
            i += 1;
            continue;
        }
        if !current.is_empty() {
            match t {
                "to" if !range && !ratio_sep => {
                    groups.push(std::mem::take(&mut current));
                    range = true;
                }
                "and" if between && !range => {
                    groups.push(std::mem::take(&mut current));
                    range = true;
                }
                "in" if !range && !ratio_sep => {
                    groups.push(std::mem::take(&mut current));
                    ratio_sep = true;
                }
                _ => break, // trailing context (unit nouns etc.)
            }
            i += 1;
            continue;
        }
        // Prefix context before any value.
        if let Some(len) = lex.approximator_len_at(lower, i) {
            i += len;
            continue;
        }
        if CURRENCY_TOKENS.contains(&t) {
            i += 1;
            continue;
        }
        if t == "between" {
            between = true;
            i += 1;
            continue;
        }
        if let Some(hit) = bound_prefix_at(lower, i) {
            bound = bound.or(hit.0);
            i += hit.1;
            continue;
        }
        if matches!(t, "a" | "an" | "the") {
            i += 1;
            continue;
        }
        return Err(NormalizeError::UnparseableNumber);
    }
    if !current.is_empty() {
        groups.push(current);
    }

    if groups.is_empty() {
        return Err(NormalizeError::UnparseableNumber);
    }

    if range {
        if groups.len() != 2 {
            return Err(NormalizeError::UnparseableNumber);
        }
        let (a, _) = compose_number(&groups[0]).ok_or(NormalizeError::UnparseableNumber)?;
        let (b, _) = compose_number(&groups[1]).ok_or(NormalizeError::UnparseableNumber)?;
        let iv = Interval::closed(a, b).map_err(|_| NormalizeError::UnparseableNumber)?;
        return Ok(Normalized { value: iv, bound, range: true, ratio: false });
    }

    if ratio_sep {
        if groups.len() != 2 {
            return Err(NormalizeError::UnparseableNumber);
        }
        use num::Zero;
        let (a, _) = compose_number(&groups[0]).ok_or(NormalizeError::UnparseableNumber)?;
        let (b, _) = compose_number(&groups[1]).ok_or(NormalizeError::UnparseableNumber)?;
        if b.is_zero() {
            return Err(NormalizeError::UnparseableNumber);
        }
        let value = apply_bound(a / b, bound);
        return Ok(Normalized { value, bound, range: false, ratio: true });
    }

    let (v, is_ratio) = compose_number(&groups[0]).ok_or(NormalizeError::UnparseableNumber)?;
    let value = apply_bound(v, bound);
    Ok(Normalized { value, bound, range: false, ratio: is_ratio })
}

fn bound_prefix_at(lower: &[String], i: usize) -> Option<(Option<BoundMarker>, usize)> {
    let w = |k: usize| lower.get(i + k).map(|s| s.as_str());
    match (w(0), w(1), w(2)) {
        (Some("no"), Some("more"), Some("than")) => return Some((Some(BoundMarker::AtMost), 3)),
        (Some("no"), Some("less"), Some("than")) | (Some("no"), Some("fewer"), Some("than")) => {
            return Some((Some(BoundMarker::AtLeast), 3))
        }
        _ => {}
    }
    match (w(0), w(1)) {
        (Some("fewer"), Some("than")) | (Some("less"), Some("than")) | (Some("lower"), Some("than")) => {
            return Some((Some(BoundMarker::LessThan), 2))
        }
        (Some("more"), Some("than")) | (Some("greater"), Some("than")) | (Some("higher"), Some("than")) => {
            return Some((Some(BoundMarker::MoreThan), 2))
        }
        (Some("at"), Some("least")) => return Some((Some(BoundMarker::AtLeast), 2)),
        (Some("at"), Some("most")) => return Some((Some(BoundMarker::AtMost), 2)),
        (Some("up"), Some("to")) => return Some((Some(BoundMarker::AtMost), 2)),
        _ => {}
    }
    match w(0) {
        Some("over") | Some("above") | Some("exceeding") => Some((Some(BoundMarker::MoreThan), 1)),
        Some("under") | Some("below") => Some((Some(BoundMarker::LessThan), 1)),
        Some("exactly") | Some("precisely") => Some((Some(BoundMarker::Exact), 1)),
        _ => None,
    }
}

fn apply_bound(v: Num, bound: Option<BoundMarker>) -> Interval {
    match bound {
        Some(BoundMarker::LessThan) => Interval::less_than(v),
        Some(BoundMarker::MoreThan) => Interval::more_than(v),
        Some(BoundMarker::AtLeast) => Interval::at_least(v),
        Some(BoundMarker::AtMost) => Interval::at_most(v),
        Some(BoundMarker::Exact) | None => Interval::point(v),
    }
}

/// Compose a run of digit tokens and written-number words into one value.
///
/// Additive-multiplicative short-scale composition first ("hundred fifty
/// eight thousand" = 158000); when a word cannot continue the running group,
/// groups are juxtaposed positionally ("two fifty eight" = 258). A trailing
/// ratio word scales a leading count ("three quarters" = 0.75).
fn compose_number(items: &[(Num, NumKind)]) -> Option<(Num, bool)> {
    use num::{One, Zero};
    if items.is_empty() {
        return None;
    }

    // Ratio words: alone, or scaled by a preceding integer count.
    if let Some(pos) = items.iter().position(|(_, k)| *k == NumKind::Ratio) {
        if pos != items.len() - 1 {
            return None;
        }
        let ratio = items[pos].0.clone();
        if pos == 0 {
            return Some((ratio, true));
        }
        let (count, _) = compose_number(&items[..pos])?;
        return Some((count * ratio, true));
    }

    let hundred = Num::from_integer(100.into());
    let thousand = Num::from_integer(1000.into());

    struct Group {
        total: Num,
        current: Num,
    }
    impl Group {
        fn value(&self) -> Num {
            &self.total + &self.current
        }
    }

    let mut groups: Vec<Num> = Vec::new();
    let mut g: Option<Group> = None;

    for (v, kind) in items {
        match kind {
            NumKind::Digit => {
                if let Some(prev) = g.take() {
                    groups.push(prev.value());
                }
                g = Some(Group { total: Num::zero(), current: v.clone() });
            }
            NumKind::Word => {
                let word = v.clone();
                match &mut g {
                    None => {
                        g = Some(Group { total: Num::zero(), current: word });
                    }
                    Some(group) => {
                        if word == hundred {
                            if group.current.is_zero() {
                                group.current = Num::one();
                            }
                            group.current = &group.current * &hundred;
                        } else if word >= thousand {
                            let mult = if group.current.is_zero() { Num::one() } else { group.current.clone() };
                            group.total = &group.total + mult * &word;
                            group.current = Num::zero();
                        } else {
                            // Small word: valid continuations are "after a
                            // hundred/multiplier" or tens-then-units.
                            let cur = group.current.clone();
                            let rem100 = cur.clone() - (cur.clone() / &hundred).floor() * &hundred;
                            let ten = Num::from_integer(10.into());
                            let rem10 = rem100.clone() - (rem100.clone() / &ten).floor() * &ten;
                            let continues = rem100.is_zero()
                                || (rem10.is_zero() && !rem100.is_zero() && word < ten);
                            if continues {
                                group.current = &group.current + &word;
                            } else {
                                groups.push(group.value());
                                g = Some(Group { total: Num::zero(), current: word });
                            }
                        }
                    }
                }
            }
            NumKind::Ratio => unreachable!("handled above"),
        }
    }
    if let Some(group) = g {
        groups.push(group.value());
    }

    if groups.len() == 1 {
        return Some((groups.pop().unwrap(), false));
    }
    // Positional concatenation of group values (all non-negative integers).
    let mut concat = String::new();
    for v in &groups {
        if !v.is_integer() || v < &Num::zero() {
            return None;
        }
        concat.push_str(&v.numer().to_string());
    }
    parse_decimal(&concat).map(|v| (v, false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::num_from_i64 as n;

    fn lex() -> LexiconSet {
        LexiconSet::embedded()
    }

    fn norm(words: &[&str]) -> Interval {
        normalize_number(words, &lex()).unwrap()
    }

    #[test]
    fn written_number_composition() {
        assert_eq!(norm(&["hundred", "fifty", "eight", "thousand"]), Interval::point(n(158_000)));
        assert_eq!(norm(&["two", "fifty", "eight"]), Interval::point(n(258)));
        assert_eq!(norm(&["twenty", "five"]), Interval::point(n(25)));
        assert_eq!(norm(&["seven", "billion"]), Interval::point(n(7_000_000_000)));
        assert_eq!(norm(&["7", "billion"]), Interval::point(n(7_000_000_000)));
        assert_eq!(norm(&["two", "hundred"]), Interval::point(n(200)));
        assert_eq!(norm(&["a", "dozen"]), Interval::point(n(12)));
    }

    #[test]
    fn digits_and_suffixes() {
        assert_eq!(norm(&["7,000"]), Interval::point(n(7_000)));
        assert_eq!(norm(&["374m"]), Interval::point(n(374_000_000)));
        assert_eq!(norm(&["40k"]), Interval::point(n(40_000)));
        assert_eq!(norm(&["55.0"]), Interval::point(n(55)));
    }

    #[test]
    fn bounds_and_ranges() {
        assert_eq!(norm(&["fewer", "than", "10"]), Interval::less_than(n(10)));
        assert_eq!(norm(&["more", "than", "700"]), Interval::more_than(n(700)));
        assert_eq!(norm(&["at", "least", "10"]), Interval::at_least(n(10)));
        assert_eq!(norm(&["up", "to", "30"]), Interval::at_most(n(30)));
        assert_eq!(
            norm(&["between", "20", "and", "30", "people"]),
            Interval::closed(n(20), n(30)).unwrap()
        );
        assert_eq!(norm(&["20", "to", "30"]), Interval::closed(n(20), n(30)).unwrap());
    }

    #[test]
    fn ratios() {
        let half = Num::new(1.into(), 2.into());
        assert_eq!(norm(&["half"]), Interval::point(half));
        let quarter = Num::new(1.into(), 4.into());
        assert_eq!(norm(&["1", "in", "4"]), Interval::point(quarter.clone()));
        let three_quarters = Num::new(3.into(), 4.into());
        assert_eq!(norm(&["three", "quarters"]), Interval::point(three_quarters));
    }

    #[test]
    fn unparseable() {
        assert_eq!(normalize_number(&["cat"], &lex()).unwrap_err(), NormalizeError::UnparseableNumber);
        assert_eq!(normalize_number(&[], &lex()).unwrap_err(), NormalizeError::UnparseableNumber);
    }

    #[test]
    fn segments_table_examples() {
        let l = lex();
        let m = segment("Teva will generate sales of about $ 7 billion a year, the company said.", &l);
        assert_eq!(m.len(), 1);
        let texts: Vec<&str> = m[0].tokens.iter().map(|t| t.text.as_str()).collect();
        assert_eq!(texts, vec!["about", "$", "7", "billion"]);
        assert_eq!(m[0].raw_value, Interval::point(n(7_000_000_000)));

        assert!(segment("The cat sat on the mat", &l).is_empty());

        let m = segment("Emmanuel Miller, 16, and Zachary Watson, 17, are charged as adults, police said.", &l);
        assert_eq!(m.len(), 2);
        assert_eq!(m[0].tokens[0].text, "16");
        assert_eq!(m[1].tokens[0].text, "17");
    }

    #[test]
    fn segments_exclude_temporal() {
        let l = lex();
        assert!(segment("He was born in 1984.", &l).is_empty());
        assert!(segment("The meeting is at 2:30 pm", &l).is_empty());
        assert!(segment("It happened on March 5.", &l).is_empty());
        // Year-like numbers modifying a noun are quantities.
        let m = segment("Rwanda has dispatched 1917 soldiers", &l);
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].raw_value, Interval::point(n(1917)));
    }

    #[test]
    fn from_to_is_not_a_range() {
        let l = lex();
        let m = segment("Prices rose from 30 to 50 dollars", &l);
        assert_eq!(m.len(), 2);
        assert_eq!(m[0].raw_value, Interval::point(n(30)));
        assert_eq!(m[1].raw_value, Interval::point(n(50)));
    }

    #[test]
    fn mention_order_and_nonoverlap() {
        let l = lex();
        let m = segment("They sold 300 cars and 20 trucks for 9 million dollars", &l);
        assert_eq!(m.len(), 3);
        for w in m.windows(2) {
            assert!(w[0].token_range.1 <= w[1].token_range.0);
        }
    }

    #[test]
    fn coverage_of_digit_tokens() {
        let l = lex();
        let sentence = "In 2014 the firm hired 250 workers and spent 1.5m dollars";
        let tokens = tokenize(sentence);
        let lower: Vec<String> = tokens.iter().map(|t| t.lower()).collect();
        let temporal = temporal_mask(&lower, &l);
        let mentions = segment(sentence, &l);
        for (i, t) in tokens.iter().enumerate() {
            if t.text.chars().any(|c| c.is_ascii_digit()) {
                let covered = temporal[i]
                    || mentions.iter().any(|m| i >= m.token_range.0 && i < m.token_range.1);
                assert!(covered, "digit token '{}' uncovered", t.text);
            }
        }
    }
}
