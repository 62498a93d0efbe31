//! Tokenization contract: whitespace-plus-punctuation splitting with currency
//! symbols and "%" as standalone tokens. Periods, commas, and colons stay
//! inside a token when flanked by digits ("7.5", "7,000", "2:30"); apostrophes
//! and hyphens stay inside words. Spans are byte offsets into the sentence.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub text: String,
    pub start: usize,
    pub end: usize,
}

impl Token {
    pub fn lower(&self) -> String {
        self.text.to_lowercase()
    }
}

const CURRENCY: &[char] = &['$', '£', '€', '¥'];
const BREAKING: &[char] = &[
    ';', '!', '?', '(', ')', '[', ']', '{', '}', '"', '“', '”', '…', '—',
];

pub fn tokenize(sentence: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    let mut start = 0usize;

    let flush = |tokens: &mut Vec<Token>, current: &mut String, start: usize, end: usize| {
        if !current.is_empty() {
            tokens.push(Token { text: std::mem::take(current), start, end });
        }
    };

    let chars: Vec<(usize, char)> = sentence.char_indices().collect();
    for (pos, &(idx, c)) in chars.iter().enumerate() {
        let next = chars.get(pos + 1).map(|&(_, n)| n);
        let prev_is_digit = current.chars().last().map(|p| p.is_ascii_digit()).unwrap_or(false);
        if c.is_whitespace() {
            flush(&mut tokens, &mut current, start, idx);
        } else if CURRENCY.contains(&c) || c == '%' {
            flush(&mut tokens, &mut current, start, idx);
            tokens.push(Token { text: c.to_string(), start: idx, end: idx + c.len_utf8() });
        } else if c == '.' || c == ',' || c == ':' {
            let next_is_digit = next.map(|n| n.is_ascii_digit()).unwrap_or(false);
            let prev_is_alpha = current.chars().last().map(|p| p.is_alphabetic()).unwrap_or(false);
            let next_is_alpha = next.map(|n| n.is_alphabetic()).unwrap_or(false);
            // Digit-internal marks (7.5, 7,000, 2:30) and acronym periods
            // (U.S.) stay inside the token.
            let acronym = c == '.' && prev_is_alpha && (next_is_alpha || current.contains('.'));
            if (prev_is_digit && next_is_digit) || acronym {
                if current.is_empty() {
                    start = idx;
                }
                current.push(c);
            } else {
                flush(&mut tokens, &mut current, start, idx);
                tokens.push(Token { text: c.to_string(), start: idx, end: idx + c.len_utf8() });
            }
        } else if BREAKING.contains(&c) {
            flush(&mut tokens, &mut current, start, idx);
            tokens.push(Token { text: c.to_string(), start: idx, end: idx + c.len_utf8() });
        } else if c == '\'' || c == '’' {
            // Word-internal possessive stays attached; quote marks split.
            let prev_alnum = current.chars().last().map(|p| p.is_alphanumeric()).unwrap_or(false);
            if prev_alnum {
                current.push(c);
            } else {
                flush(&mut tokens, &mut current, start, idx);
                tokens.push(Token { text: c.to_string(), start: idx, end: idx + c.len_utf8() });
            }
        } else {
            if current.is_empty() {
                start = idx;
            }
            current.push(c);
        }
    }
    flush(&mut tokens, &mut current, start, sentence.len());
    tokens
}

pub fn is_punctuation(text: &str) -> bool {
    text.chars().all(|c| c.is_ascii_punctuation() || BREAKING.contains(&c)) && !text.chars().any(|c| c.is_alphanumeric())
}

/// Pure digit token, allowing grouping commas and a decimal point.
pub fn is_digit_token(text: &str) -> bool {
    !text.is_empty()
        && text.chars().all(|c| c.is_ascii_digit() || c == '.' || c == ',')
        && text.chars().any(|c| c.is_ascii_digit())
        && !text.ends_with('.')
        && !text.ends_with(',')
}
