//! Shared shallow token-scanning helpers used by the validity checker and
//! the rule matchers.

use super::token::{is_primitive_type, Token, TokenKind};

/// Indices of significant tokens (everything but whitespace and comments).
pub fn significant_indices(tokens: &[Token]) -> Vec<usize> {
    tokens
        .iter()
        .enumerate()
        .filter(|(_, t)| t.is_significant())
        .map(|(i, _)| i)
        .collect()
}

/// For a `<` at `sig[from]`, try to read balanced generic type arguments.
/// Returns the `sig` position just past the matching `>` when the contents
/// look like type arguments, None otherwise.
pub fn scan_type_args(tokens: &[Token], sig: &[usize], from: usize) -> Option<usize> {
    let mut depth = 0i32;
    let mut k = from;
    loop {
        let t = &tokens[*sig.get(k)?];
        match (&t.kind, t.text.as_str()) {
            (TokenKind::Operator, "<") => depth += 1,
            (TokenKind::Operator, ">") => {
                depth -= 1;
                if depth == 0 {
                    return Some(k + 1);
                }
            }
            (TokenKind::Operator, ">>") => {
                depth -= 2;
                if depth == 0 {
                    return Some(k + 1);
                }
                if depth < 0 {
                    return None;
                }
            }
            (TokenKind::Operator, ">>>") => {
                depth -= 3;
                if depth == 0 {
                    return Some(k + 1);
                }
                if depth < 0 {
                    return None;
                }
            }
            (TokenKind::Ident, _)
            | (TokenKind::Operator, "?")
            | (TokenKind::Operator, "&")
            | (TokenKind::Punct, ",")
            | (TokenKind::Punct, ".")
            | (TokenKind::Punct, "[")
            | (TokenKind::Punct, "]") => {}
            (TokenKind::Keyword, "extends") | (TokenKind::Keyword, "super") => {}
            (TokenKind::Keyword, kw) if is_primitive_type(kw) => {}
            _ => return None,
        }
        k += 1;
    }
}

/// Position of the matching closing delimiter for the opener at `sig[open]`.
pub fn matching_close(tokens: &[Token], sig: &[usize], open: usize) -> Option<usize> {
    let open_text = tokens[sig[open]].text.as_str();
    let close_text = match open_text {
        "(" => ")",
        "[" => "]",
        "{" => "}",
        _ => return None,
    };
    let mut depth = 0usize;
    for (k, &raw) in sig.iter().enumerate().skip(open) {
        let t = &tokens[raw];
        if t.kind == TokenKind::Punct {
            if t.text == open_text {
                depth += 1;
            } else if t.text == close_text {
                depth -= 1;
                if depth == 0 {
                    return Some(k);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::lexer::tokenize;

    #[test]
    fn type_args_accept_nesting_and_wildcards() {
        let tokens = tokenize("<Map<String, ? extends Number>, int[]>").unwrap();
        let sig = significant_indices(&tokens);
        assert_eq!(scan_type_args(&tokens, &sig, 0), Some(sig.len()));
    }

    #[test]
    fn comparison_is_not_type_args() {
        let tokens = tokenize("< b + 1").unwrap();
        let sig = significant_indices(&tokens);
        assert_eq!(scan_type_args(&tokens, &sig, 0), None);
    }

    #[test]
    fn matching_close_finds_paren() {
        let tokens = tokenize("(a, (b), c) d").unwrap();
        let sig = significant_indices(&tokens);
        let close = matching_close(&tokens, &sig, 0).unwrap();
        assert_eq!(tokens[sig[close]].text, ")");
        assert_eq!(close, sig.len() - 2);
    }
}
