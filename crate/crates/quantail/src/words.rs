//! Small closed word classes used by the segmentation and parsing heuristics.
//! These are implementation details of the window heuristics, not part of the
//! configurable lexicon surface.

pub const STOPWORDS: &[&str] = &[
    "a", "an", "the", "this", "that", "these", "those", "some", "any", "no", "each", "every",
    "of", "in", "on", "at", "to", "from", "for", "with", "without", "by", "about", "as",
    "into", "onto", "over", "under", "between", "among", "through", "during", "per",
    "and", "or", "but", "nor", "so", "yet", "if", "then", "than", "because", "while",
    "i", "you", "he", "she", "it", "we", "they", "him", "her", "them", "his", "hers",
    "its", "their", "theirs", "our", "ours", "my", "mine", "your", "yours", "me", "us",
    "who", "whom", "whose", "which", "what", "when", "where", "why", "how",
    "is", "am", "are", "was", "were", "be", "been", "being",
    "do", "does", "did", "done", "doing",
    "have", "has", "had", "having",
    "will", "would", "shall", "should", "can", "could", "may", "might", "must",
    "not", "there", "here", "up", "down", "out", "off", "both", "either", "neither",
    "more", "most", "less", "least", "fewer", "fewest", "much", "many", "few",
    "all", "only", "just", "also", "too", "very", "still", "even", "now",
    "said", "says", "say",
];

/// Common verbs for the nearest-preceding-verb heuristic; matched after
/// suffix-stripping, so inflected forms fold onto these stems.
pub const VERBS: &[&str] = &[
    "be", "is", "are", "was", "were", "been", "being", "has", "have", "had", "having",
    "do", "does", "did", "make", "makes", "made", "take", "takes", "took", "taken",
    "get", "gets", "got", "gotten", "give", "gives", "gave", "given",
    "go", "goes", "went", "gone", "come", "comes", "came",
    "see", "sees", "saw", "seen", "know", "knows", "knew", "known",
    "think", "thinks", "thought", "find", "finds", "found",
    "use", "uses", "used", "work", "works", "worked", "working",
    "call", "calls", "called", "try", "tries", "tried",
    "ask", "asks", "asked", "need", "needs", "needed",
    "feel", "feels", "felt", "become", "becomes", "became",
    "leave", "leaves", "left", "put", "puts", "mean", "means", "meant",
    "keep", "keeps", "kept", "let", "lets", "begin", "begins", "began", "begun",
    "show", "shows", "showed", "shown", "hear", "hears", "heard",
    "play", "plays", "played", "run", "runs", "ran", "move", "moves", "moved",
    "live", "lives", "lived", "believe", "believes", "believed",
    "hold", "holds", "held", "bring", "brings", "brought",
    "happen", "happens", "happened", "write", "writes", "wrote", "written",
    "sit", "sits", "sat", "stand", "stands", "stood",
    "lose", "loses", "lost", "pay", "pays", "paid", "meet", "meets", "met",
    "include", "includes", "included", "continue", "continues", "continued",
    "set", "sets", "learn", "learns", "learned", "change", "changes", "changed",
    "lead", "leads", "led", "understand", "understood",
    "watch", "watches", "watched", "follow", "follows", "followed",
    "stop", "stops", "stopped", "create", "creates", "created",
    "speak", "speaks", "spoke", "spoken", "read", "reads",
    "spend", "spends", "spent", "grow", "grows", "grew", "grown",
    "open", "opens", "opened", "walk", "walks", "walked",
    "win", "wins", "won", "offer", "offers", "offered",
    "remember", "remembers", "remembered", "consider", "considers", "considered",
    "appear", "appears", "appeared", "buy", "buys", "bought",
    "wait", "waits", "waited", "serve", "serves", "served",
    "die", "dies", "died", "send", "sends", "sent",
    "expect", "expects", "expected", "build", "builds", "built",
    "stay", "stays", "stayed", "fall", "falls", "fell", "fallen",
    "cut", "cuts", "reach", "reaches", "reached", "kill", "kills", "killed",
    "remain", "remains", "remained", "suggest", "suggests", "suggested",
    "raise", "raises", "raised", "pass", "passes", "passed",
    "sell", "sells", "sold", "require", "requires", "required",
    "report", "reports", "reported", "decide", "decides", "decided",
    "pull", "pulls", "pulled", "carry", "carries", "carried",
    "eat", "eats", "ate", "eaten", "drink", "drinks", "drank",
    "injure", "injures", "injured", "wound", "wounds", "wounded",
    "arrest", "arrests", "arrested", "charge", "charges", "charged",
    "employ", "employs", "employed", "hire", "hires", "hired",
    "earn", "earns", "earned", "generate", "generates", "generated",
    "dispatch", "dispatches", "dispatched", "deploy", "deploys", "deployed",
    "trap", "traps", "trapped", "rescue", "rescues", "rescued",
    "capsize", "capsized", "own", "owns", "owned", "owe", "owes", "owed",
    "cost", "costs", "travel", "travels", "traveled", "travelled",
    "drive", "drives", "drove", "driven", "pick", "picks", "picked",
    "plant", "plants", "planted", "collect", "collects", "collected",
    "celebrate", "celebrates", "celebrated", "face", "faces", "faced",
    "vote", "votes", "voted", "poll", "polled", "elect", "elects", "elected",
    "borrow", "borrowed", "lend", "lends", "lent", "save", "saves", "saved",
    "add", "adds", "added", "receive", "receives", "received",
    "contain", "contains", "contained", "weigh", "weighs", "weighed",
    "measure", "measures", "measured", "count", "counts", "counted",
    "share", "shared", "split", "splits", "divide", "divides", "divided",
];

pub const ADJECTIVES: &[&str] = &[
    "black", "white", "red", "blue", "green", "yellow", "brown", "grey", "gray",
    "big", "small", "large", "huge", "tiny", "little", "great",
    "new", "old", "young", "recent", "former", "current",
    "high", "low", "higher", "lower", "highest", "lowest",
    "rich", "poor", "richest", "poorest", "wealthy",
    "good", "bad", "best", "worst", "better", "worse",
    "long", "short", "tall", "wide", "narrow", "deep", "shallow",
    "fast", "slow", "heavy", "light", "strong", "weak",
    "hot", "cold", "warm", "cool", "dead", "alive", "injured", "wounded",
    "male", "female", "senior", "junior", "major", "minor",
    "severe", "deadly", "fatal", "serious", "critical",
    "local", "national", "federal", "foreign", "international",
    "total", "average", "extra", "additional", "remaining", "whole",
    "early", "late", "annual", "monthly", "weekly", "daily",
    "public", "private", "official", "main", "chief", "top",
];

pub const MONTHS: &[&str] = &[
    "january", "february", "march", "april", "may", "june", "july", "august",
    "september", "october", "november", "december",
    "jan", "feb", "mar", "apr", "jun", "jul", "aug", "sep", "sept", "oct", "nov", "dec",
];

/// Nouns that form recurrence phrases with a leading article ("a year").
pub const TIME_NOUNS: &[&str] = &[
    "year", "month", "week", "day", "hour", "minute", "second", "annum", "quarter",
];

/// Prepositions that mark a standalone year as temporal context.
pub const TEMPORAL_PREPS: &[&str] = &["in", "since", "by", "during", "until", "till"];

pub fn is_stopword(word: &str) -> bool {
    STOPWORDS.contains(&word)
}

pub fn is_adjective(word: &str) -> bool {
    ADJECTIVES.contains(&word)
}

pub fn is_month(word: &str) -> bool {
    MONTHS.contains(&word)
}

pub fn is_time_noun(word: &str) -> bool {
    TIME_NOUNS.contains(&word)
}

/// Strip common inflection suffixes for lemma-ish matching.
pub fn stem(word: &str) -> String {
    let w = word.to_lowercase();
    for suffix in ["ing", "ied", "ies", "ed", "es", "s"] {
        if let Some(base) = w.strip_suffix(suffix) {
            if base.len() >= 3 {
                return base.to_string();
            }
        }
    }
    w
}

pub fn is_verb(word: &str) -> bool {
    let w = word.to_lowercase();
    if VERBS.contains(&w.as_str()) {
        return true;
    }
    let stemmed = stem(&w);
    VERBS.iter().any(|v| stem(v) == stemmed)
}

/// Noun-ish: alphabetic content token that is none of the closed classes.
pub fn is_nounish(word: &str) -> bool {
    let w = word.to_lowercase();
    !w.is_empty()
        && w.chars().all(|c| c.is_alphabetic() || c == '\'' || c == '-' || c == '’')
        && !is_stopword(&w)
        && !is_verb(&w)
        && !is_adjective(&w)
        && !is_month(&w)
}
