//! Plain-text format for a transducer: a `states:` header, an `alphabet:`
//! header, then one `STATE SYMBOL -> STATE SYMBOL` line per transition.
//! Every (state, symbol) pair must appear exactly once. `#` lines are
//! comments, blank lines are ignored.

use autsg::MealyAutomaton;

pub fn parse_mealy(text: &str) -> Result<MealyAutomaton, String> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or("empty file: expected `states:`")?;
    let states: Vec<String> = header
        .strip_prefix("states:")
        .ok_or(format!("line {line}: expected a `states:` header"))?
        .split_whitespace()
        .map(str::to_string)
        .collect();

    let (line, header) = lines
        .next()
        .ok_or("missing `alphabet:` header".to_string())?;
    let alphabet: Vec<String> = header
        .strip_prefix("alphabet:")
        .ok_or(format!("line {line}: expected an `alphabet:` header"))?
        .split_whitespace()
        .map(str::to_string)
        .collect();

    if states.is_empty() || alphabet.is_empty() {
        return Err("states and alphabet must be non-empty".into());
    }
    let state_index = |name: &str| states.iter().position(|s| s == name);
    let symbol_index = |name: &str| alphabet.iter().position(|s| s == name);

    let mut delta: Vec<Vec<Option<(usize, usize)>>> =
        vec![vec![None; alphabet.len()]; states.len()];
    for (line, text) in lines {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let [src, sym, arrow, dst, out] = tokens[..] else {
            return Err(format!(
                "line {line}: expected `STATE SYMBOL -> STATE SYMBOL`"
            ));
        };
        if arrow != "->" {
            return Err(format!("line {line}: expected `->`, found `{arrow}`"));
        }
        let q = state_index(src).ok_or(format!("line {line}: unknown state `{src}`"))?;
        let b = symbol_index(sym).ok_or(format!("line {line}: unknown symbol `{sym}`"))?;
        let next = state_index(dst).ok_or(format!("line {line}: unknown state `{dst}`"))?;
        let emitted = symbol_index(out).ok_or(format!("line {line}: unknown symbol `{out}`"))?;
        if delta[q][b].is_some() {
            return Err(format!("line {line}: duplicate transition ({src}, {sym})"));
        }
        delta[q][b] = Some((next, emitted));
    }

    let mut rows = Vec::with_capacity(states.len());
    for (q, row) in delta.into_iter().enumerate() {
        let mut complete = Vec::with_capacity(alphabet.len());
        for (b, entry) in row.into_iter().enumerate() {
            complete.push(entry.ok_or(format!(
                "missing transition ({}, {})",
                states[q], alphabet[b]
            ))?);
        }
        rows.push(complete);
    }
    MealyAutomaton::new(states, alphabet, rows).map_err(|e| e.to_string())
}
