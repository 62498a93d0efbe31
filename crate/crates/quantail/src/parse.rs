//! Quantity parser: lift a segmented mention into a grounded NumSet by
//! extracting unit, entity, adjective, location, verb, frequency, flux, and
//! approximator from sentence context.
//!
//! The original attachment rules presume a dependency parse; here they are
//! windowed heuristics over the token stream, checked against golden
//! fixtures rather than claimed equivalent.

use num::bigint::BigInt;
use num::rational::BigRational;
use thiserror::Error;

use crate::interval::Interval;
use crate::lexicon::LexiconSet;
use crate::numset::{Flux, NumSet, Source, TokenSpan};
use crate::segment::{segment_with_diagnostics, QuantityMention};
use crate::text::{is_punctuation, Token};
use crate::value::Num;
use crate::words;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("no unit candidate found")]
    MissingUnit,
}

fn span_of(tokens: &[Token], start: usize, end: usize) -> TokenSpan {
    let text = tokens[start..end]
        .iter()
        .map(|t| t.text.as_str())
        .collect::<Vec<_>>()
        .join(" ");
    TokenSpan { start, end, text }
}

fn ratio(n: i64, d: i64) -> Num {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Widen a degenerate value to +/-2% of itself. No-op on ranges, so a second
/// application cannot widen again.
fn widen_two_percent(iv: &Interval) -> Interval {
    match iv.point_value() {
        Some(v) => {
            let lo = v * ratio(98, 100);
            let hi = v * ratio(102, 100);
            let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
            Interval::closed(lo, hi).expect("ordered endpoints")
        }
        None => iv.clone(),
    }
}

fn is_unit_candidate(text: &str, lex: &LexiconSet) -> bool {
    words::is_nounish(text) || lex.is_known_unit(text)
}

const COPULAS: &[&str] = &["is", "are", "was", "were", "be", "been", "being"];

/// Construct a grounded NumSet for one quantity mention.
pub fn parse_quantity(
    mention: &QuantityMention,
    tokens: &[Token],
    lex: &LexiconSet,
    source: Source,
) -> Result<NumSet, ParseError> {
    let lower: Vec<String> = tokens.iter().map(|t| t.lower()).collect();
    let (win_start, win_end) = mention.token_range;
    let n = tokens.len();
    let first_cardinal = *mention.cardinal_positions.first().expect("mention has a cardinal");

    // Approximator: adverbial token (or phrase) in the window before the
    // first cardinal.
    let mut approximate = false;
    let mut j = win_start;
    while j < first_cardinal {
        if let Some(len) = lex.approximator_len_at(&lower, j) {
            approximate = true;
            j += len;
        } else {
            j += 1;
        }
    }

    let val = if approximate && mention.raw_value.is_degenerate() {
        widen_two_percent(&mention.raw_value)
    } else {
        mention.raw_value.clone()
    };

    let unit = resolve_unit(mention, tokens, &lower, lex).ok_or(ParseError::MissingUnit)?;

    // Adjective immediately preceding the unit, else a copula predicate
    // adjective right after it ("lambs are black").
    let mut adj = None;
    if unit.start > 0 && words::is_adjective(&lower[unit.start - 1]) {
        adj = Some(span_of(tokens, unit.start - 1, unit.start));
    } else if unit.end + 1 < n
        && COPULAS.contains(&lower[unit.end].as_str())
        && words::is_adjective(&lower[unit.end + 1])
    {
        adj = Some(span_of(tokens, unit.end + 1, unit.end + 2));
    }

    // Entity linked by of/worth directly before the mention window.
    let mut ent = None;
    if win_start >= 2 {
        let link = lower[win_start - 1].as_str();
        if link == "of" || link == "worth" {
            let mut k = win_start - 1;
            while k > 0 {
                k -= 1;
                if words::is_nounish(&lower[k]) {
                    ent = Some(span_of(tokens, k, k + 1));
                    break;
                }
                if is_punctuation(&lower[k]) || win_start - 1 - k >= 3 {
                    break;
                }
            }
        }
    }

    // Nearest preceding verb within the clause.
    let mut verb = None;
    {
        let mut k = win_start;
        while k > 0 {
            k -= 1;
            let t = lower[k].as_str();
            if is_punctuation(t) && t != "," {
                break;
            }
            if words::is_verb(t) && !COPULAS.contains(&t) {
                verb = Some(span_of(tokens, k, k + 1));
                break;
            }
        }
    }

    // Frequency: per/every/each + noun, or article + time noun, shortly after
    // the mention (or after a trailing unit).
    let mut freq = Vec::new();
    let freq_scan_from = unit.end.max(win_end);
    if n > 0 {
        for k in freq_scan_from..(freq_scan_from + 4).min(n - 1) {
            let t = lower[k].as_str();
            if lex.is_freq_marker(t) && words::is_nounish(&lower[k + 1]) {
                freq.push(span_of(tokens, k, k + 2));
                break;
            }
            // Trailing "each" marks recurrence on its own ("6 apples each").
            if t == "each" {
                freq.push(span_of(tokens, k, k + 1));
                break;
            }
            if matches!(t, "a" | "an") && words::is_time_noun(&lower[k + 1]) {
                freq.push(span_of(tokens, k, k + 2));
                break;
            }
            // A following quantity owns whatever recurrence phrase comes next.
            if is_punctuation(t) || t.chars().any(|c| c.is_ascii_digit()) {
                break;
            }
        }
    }

    // Flux verb governing the quantity, direction refined by to/from.
    let mut flux = None;
    {
        let mut k = win_start;
        let mut steps = 0;
        while k > 0 && steps < 5 {
            k -= 1;
            steps += 1;
            let t = lower[k].as_str();
            if is_punctuation(t) && t != "," {
                break;
            }
            if let Some(direction) = lex.flux_direction(t) {
                let mut from = false;
                for p in (k + 1)..win_start {
                    match lower[p].as_str() {
                        "from" => from = true,
                        "to" => from = false,
                        _ => {}
                    }
                }
                flux = Some(match (direction, from) {
                    (crate::lexicon::FluxDirection::Increase, false) => Flux::IncreaseTo,
                    (crate::lexicon::FluxDirection::Increase, true) => Flux::IncreaseFrom,
                    (crate::lexicon::FluxDirection::Decrease, false) => Flux::DecreaseTo,
                    (crate::lexicon::FluxDirection::Decrease, true) => Flux::DecreaseFrom,
                });
                break;
            }
        }
    }

    // Location: trailing prepositional chunk (in/at/on ... noun).
    let mut loc = Vec::new();
    {
        let mut k = unit.end.max(win_end);
        let limit = (k + 6).min(n);
        while k < limit {
            let t = lower[k].as_str();
            if matches!(t, "in" | "at" | "on") {
                let mut m = k + 1;
                let chunk_limit = (k + 4).min(n);
                while m < chunk_limit {
                    if words::is_nounish(&lower[m]) {
                        loc.push(span_of(tokens, k, m + 1));
                        break;
                    }
                    if is_punctuation(&lower[m]) {
                        break;
                    }
                    m += 1;
                }
                break;
            }
            if is_punctuation(t) && t != "," {
                break;
            }
            k += 1;
        }
    }

    Ok(NumSet {
        val,
        unit,
        ent,
        adj,
        loc,
        verb,
        freq,
        flux,
        approximate,
        ratio: mention.ratio,
        source,
        mention: mention.span,
    })
}

const PRO_FORMS: &[&str] = &["one", "ones", "other", "others"];

/// A pro-form unit ("193 white ones") resolves to the nearest preceding noun
/// when one exists.
fn resolve_pro_form(unit: TokenSpan, tokens: &[Token], lower: &[String]) -> TokenSpan {
    if !PRO_FORMS.contains(&unit.text.to_lowercase().as_str()) {
        return unit;
    }
    let mut k = unit.start;
    while k > 0 {
        k -= 1;
        if words::is_nounish(&lower[k]) {
            return span_of(tokens, k, k + 1);
        }
    }
    unit
}

/// Unit resolution: nearest known unit adjacent to the cardinal cluster,
/// else the token in numeric-modifier position (skipping adjectives, with
/// "of"-NP head resolution), else the nearest noun.
fn resolve_unit(
    mention: &QuantityMention,
    tokens: &[Token],
    lower: &[String],
    lex: &LexiconSet,
) -> Option<TokenSpan> {
    let (win_start, win_end) = mention.token_range;
    let n = tokens.len();

    // Rule 1: known units adjacent to the cardinal cluster (inside the window
    // or one token beyond either edge), nearest to a cardinal.
    let mut best: Option<(usize, usize)> = None; // (distance, index)
    let lo = win_start.saturating_sub(1);
    let hi = (win_end + 1).min(n);
    for i in lo..hi {
        if mention.cardinal_positions.contains(&i) {
            continue;
        }
        if lex.is_known_unit(&lower[i]) {
            let dist = mention
                .cardinal_positions
                .iter()
                .map(|&c| c.abs_diff(i))
                .min()
                .unwrap_or(usize::MAX);
            if best.map(|(d, _)| dist < d).unwrap_or(true) {
                best = Some((dist, i));
            }
        }
    }
    if let Some((_, i)) = best {
        return Some(span_of(tokens, i, i + 1));
    }

    // Rule 2: numeric-modifier position right of the window.
    if win_end < n {
        if lower[win_end] == "of" {
            // Head noun of the following NP: last noun-ish token of the run.
            let mut head = None;
            let mut k = win_end + 1;
            while k < n {
                let t = lower[k].as_str();
                if words::is_nounish(t) || lex.is_known_unit(t) {
                    head = Some(k);
                    k += 1;
                    continue;
                }
                if words::is_adjective(t) || matches!(t, "a" | "an" | "the") {
                    k += 1;
                    continue;
                }
                break;
            }
            if let Some(h) = head {
                return Some(resolve_pro_form(span_of(tokens, h, h + 1), tokens, lower));
            }
        } else {
            let mut k = win_end;
            let mut skipped = 0;
            while k < n && skipped < 2 && words::is_adjective(&lower[k]) {
                k += 1;
                skipped += 1;
            }
            if k < n && is_unit_candidate(&lower[k], lex) {
                return Some(resolve_pro_form(span_of(tokens, k, k + 1), tokens, lower));
            }
        }
    }

    // Rule 3: nearest noun, scanning right then left at increasing distance.
    // One comma may be crossed per side; other punctuation bounds the scan.
    let mut right_blocked = false;
    let mut left_blocked = false;
    let mut right_commas = 0;
    let mut left_commas = 0;
    for dist in 1..=6usize {
        let r = win_end + dist - 1;
        if !right_blocked && r < n {
            let t = lower[r].as_str();
            if t == "," {
                right_commas += 1;
                if right_commas > 1 {
                    right_blocked = true;
                }
            } else if is_punctuation(t) {
                right_blocked = true;
            } else if is_unit_candidate(t, lex) {
                return Some(resolve_pro_form(span_of(tokens, r, r + 1), tokens, lower));
            }
        }
        if !left_blocked {
            if let Some(l) = win_start.checked_sub(dist) {
                let t = lower[l].as_str();
                if t == "," {
                    left_commas += 1;
                    if left_commas > 1 {
                        left_blocked = true;
                    }
                } else if is_punctuation(t) {
                    left_blocked = true;
                } else if is_unit_candidate(t, lex) {
                    return Some(resolve_pro_form(span_of(tokens, l, l + 1), tokens, lower));
                }
            } else {
                left_blocked = true;
            }
        }
    }
    None
}

/// Segment and parse a whole sentence; mentions with no unit candidate are
/// dropped with a diagnostic.
pub fn parse_sentence(
    sentence: &str,
    lex: &LexiconSet,
    source: Source,
) -> (Vec<NumSet>, Vec<String>) {
    let tokens = crate::text::tokenize(sentence);
    let (mentions, mut diagnostics) = segment_with_diagnostics(sentence, lex);
    let mut numsets = Vec::new();
    for m in &mentions {
        match parse_quantity(m, &tokens, lex, source) {
            Ok(ns) => numsets.push(ns),
            Err(e) => diagnostics.push(format!(
                "dropped quantity '{}': {}",
                &sentence[m.span.start..m.span.end],
                e
            )),
        }
    }
    (numsets, diagnostics)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::segment::segment;
    use crate::text::tokenize;
    use crate::value::num_from_i64 as num;

    fn lex() -> LexiconSet {
        LexiconSet::embedded()
    }

    fn parse_first(sentence: &str) -> NumSet {
        let l = lex();
        let tokens = tokenize(sentence);
        let mentions = segment(sentence, &l);
        assert!(!mentions.is_empty(), "no mention in: {sentence}");
        parse_quantity(&mentions[0], &tokens, &l, Source::Premise).unwrap()
    }

    #[test]
    fn table_rte_example() {
        let ns = parse_first("Teva will generate sales of about $ 7 billion a year, the company said.");
        assert_eq!(ns.unit.text, "$");
        assert!(ns.approximate);
        let lo = num(7_000_000_000) * ratio(98, 100);
        let hi = num(7_000_000_000) * ratio(102, 100);
        assert_eq!(ns.val, Interval::closed(lo, hi).unwrap());
        assert_eq!(ns.freq.len(), 1);
        assert_eq!(ns.freq[0].text, "a year");
        assert_eq!(ns.ent.as_ref().unwrap().text, "sales");
    }

    #[test]
    fn lambs_unit() {
        let ns = parse_first("Each of farmer Cunningham's 6048 lambs is either black or white.");
        assert_eq!(ns.unit.text, "lambs");
        assert_eq!(ns.val, Interval::point(num(6048)));
    }

    #[test]
    fn of_phrase_head_unit() {
        let ns = parse_first("5855 of Farmer Cunningham's lambs are black.");
        assert_eq!(ns.unit.text, "lambs");
        assert_eq!(ns.adj.as_ref().unwrap().text, "black");
    }

    #[test]
    fn approximate_widening() {
        let ns = parse_first("Rwanda has dispatched some 1900 soldiers.");
        assert_eq!(ns.unit.text, "soldiers");
        assert!(ns.approximate);
        assert_eq!(ns.val, Interval::closed(num(1862), num(1938)).unwrap());
        assert_eq!(ns.verb.as_ref().unwrap().text, "dispatched");
    }

    #[test]
    fn widening_applies_once() {
        let l = lex();
        let sentence = "Rwanda has dispatched some 1900 soldiers.";
        let tokens = tokenize(sentence);
        let mentions = segment(sentence, &l);
        let a = parse_quantity(&mentions[0], &tokens, &l, Source::Premise).unwrap();
        let b = parse_quantity(&mentions[0], &tokens, &l, Source::Premise).unwrap();
        assert_eq!(a.val, b.val);
        // The mention itself is never widened.
        assert_eq!(mentions[0].raw_value, Interval::point(num(1900)));
    }

    #[test]
    fn adjective_before_unit() {
        let ns = parse_first("There are 193 white ones in the pen.");
        assert_eq!(ns.unit.text, "ones");
        assert_eq!(ns.adj.as_ref().unwrap().text, "white");
        assert_eq!(ns.loc.len(), 1);
        assert_eq!(ns.loc[0].text, "in the pen");
    }

    #[test]
    fn flux_directions() {
        let ns = parse_first("The price rose to 50 dollars.");
        assert_eq!(ns.flux, Some(Flux::IncreaseTo));
        let ns = parse_first("The price fell from 50 dollars.");
        assert_eq!(ns.flux, Some(Flux::DecreaseFrom));
    }

    #[test]
    fn percent_unit() {
        let ns = parse_first("Dewhurst held 48 % of the vote.");
        assert_eq!(ns.unit.text, "%");
        assert_eq!(ns.val, Interval::point(num(48)));
    }

    #[test]
    fn frequency_marker() {
        let ns = parse_first("The meter charges 3 dollars per hour.");
        assert_eq!(ns.unit.text, "dollars");
        assert_eq!(ns.freq.len(), 1);
        assert_eq!(ns.freq[0].text, "per hour");
    }

    #[test]
    fn missing_unit_dropped() {
        let l = lex();
        let (numsets, diags) = parse_sentence("16, 17.", &l, Source::Premise);
        assert!(numsets.is_empty());
        assert_eq!(diags.len(), 2);
    }
}
