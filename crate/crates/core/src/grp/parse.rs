//! Text formats: presentations, permutation generators, and element words.

use super::{FiniteGroup, Perm, Presentation};
use crate::error::{Error, Result};

/// Parse the presentation format:
///
/// ```text
/// # comment
/// gens: a b c
/// rel: a c a^-1 c^-3
/// ```
///
/// Relator tokens are generator names with optional `^k` / `^-k` suffixes.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut gen_names: Option<Vec<String>> = None;
    let mut relators: Vec<Vec<i32>> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("gens:") {
            if gen_names.is_some() {
                return Err(Error::parse(format!("line {}: duplicate gens line", lineno + 1)));
            }
            let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            for n in &names {
                if !n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                    return Err(Error::parse(format!("invalid generator name {n:?}")));
                }
            }
            if names.is_empty() {
                return Err(Error::parse("gens line lists no generators".to_string()));
            }
            gen_names = Some(names);
        } else if let Some(rest) = line.strip_prefix("rel:") {
            let names = gen_names
                .as_ref()
                .ok_or_else(|| Error::parse("rel before gens".to_string()))?;
            let mut word = Vec::new();
            for token in rest.split_whitespace() {
                let (name, exp) = split_exponent(token)?;
                let idx = names
                    .iter()
                    .position(|n| n == name)
                    .ok_or_else(|| Error::parse(format!("unknown generator {name:?}")))?;
                let letter = if exp < 0 { -(idx as i32 + 1) } else { idx as i32 + 1 };
                for _ in 0..exp.unsigned_abs() {
                    word.push(letter);
                }
            }
            if word.is_empty() {
                return Err(Error::parse(format!("line {}: empty relator", lineno + 1)));
            }
            relators.push(word);
        } else {
            return Err(Error::parse(format!("line {}: expected gens:/rel:", lineno + 1)));
        }
    }
    let gen_names = gen_names.ok_or_else(|| Error::parse("no gens line".to_string()))?;
    Presentation::new(gen_names, relators)
}

fn split_exponent(token: &str) -> Result<(&str, i64)> {
    match token.find('^') {
        None => Ok((token, 1)),
        Some(i) => {
            let exp: i64 = token[i + 1..]
                .parse()
                .map_err(|_| Error::parse(format!("bad exponent in {token:?}")))?;
            if i == 0 {
                return Err(Error::parse(format!("exponent with no base in {token:?}")));
            }
            Ok((&token[..i], exp))
        }
    }
}

/// Parse one permutation generator per line, disjoint cycles over 1-based
/// points: `(1 2)(3 4)`. Commas are accepted as separators inside cycles.
pub fn parse_permutation_file(text: &str) -> Result<Vec<Perm>> {
    let mut raw_cycles: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut degree = 1;
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let cycles = parse_cycles(line)
            .map_err(|e| Error::parse(format!("line {}: {e}", lineno + 1)))?;
        for c in &cycles {
            for &p in c {
                degree = degree.max(p + 1);
            }
        }
        raw_cycles.push(cycles);
    }
    raw_cycles
        .into_iter()
        .map(|cycles| Perm::from_cycles(degree, &cycles))
        .collect()
}

fn parse_cycles(line: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut chars = line.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c != '(' {
            return Err(Error::parse(format!("expected '(', found {c:?}")));
        }
        chars.next();
        let mut cycle = Vec::new();
        let mut num = String::new();
        loop {
            match chars.next() {
                Some(')') => {
                    if !num.is_empty() {
                        cycle.push(parse_point(&num)?);
                    }
                    break;
                }
                Some(d) if d.is_ascii_digit() => num.push(d),
                Some(sep) if sep.is_whitespace() || sep == ',' => {
                    if !num.is_empty() {
                        cycle.push(parse_point(&num)?);
                        num.clear();
                    }
                }
                Some(other) => {
                    return Err(Error::parse(format!("unexpected {other:?} in cycle")));
                }
                None => return Err(Error::parse("unterminated cycle".to_string())),
            }
        }
        if cycle.len() < 2 {
            return Err(Error::parse("cycle with fewer than two points".to_string()));
        }
        cycles.push(cycle);
    }
    Ok(cycles)
}

fn parse_point(s: &str) -> Result<usize> {
    let p: usize = s
        .parse()
        .map_err(|_| Error::parse(format!("bad point {s:?}")))?;
    if p == 0 {
        return Err(Error::parse("points are 1-based".to_string()));
    }
    Ok(p - 1)
}

/// Resolve an element word against a group's named elements: juxtaposed
/// names with optional `^k` exponents, longest name match first. `1` is
/// the identity; whitespace and `*` separate factors.
pub fn element_from_word(group: &FiniteGroup, word: &str) -> Result<usize> {
    let mut names: Vec<(&str, usize)> = group
        .named_elements()
        .iter()
        .map(|(n, e)| (n.as_str(), *e))
        .collect();
    names.push(("1", group.identity()));
    names.sort_by_key(|(n, _)| std::cmp::Reverse(n.len()));

    let bytes = word.as_bytes();
    let mut pos = 0;
    let mut acc = group.identity();
    let mut matched_any = false;
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        if c.is_whitespace() || c == '*' {
            pos += 1;
            continue;
        }
        let rest = &word[pos..];
        let (name, elem) = names
            .iter()
            .find(|(n, _)| rest.starts_with(n))
            .copied()
            .ok_or_else(|| {
                Error::parse(format!("no generator name matches at {rest:?} in {word:?}"))
            })?;
        pos += name.len();
        let mut exp: i64 = 1;
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            let start = pos;
            if pos < bytes.len() && bytes[pos] == b'-' {
                pos += 1;
            }
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            exp = word[start..pos]
                .parse()
                .map_err(|_| Error::parse(format!("bad exponent in {word:?}")))?;
        }
        acc = group.mul(acc, group.pow(elem, exp));
        matched_any = true;
    }
    if !matched_any {
        return Err(Error::parse(format!("empty element word {word:?}")));
    }
    Ok(acc)
}
