//! Lossless lexer for Java source text.
//!
//! Every byte of the input ends up in exactly one token, so concatenating the
//! token texts in order gives back the original file. Unicode escapes are kept
//! as written. Unterminated strings, chars and block comments swallow the rest
//! of the file and produce a [`LexWarning`].

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TokenKind {
    Identifier,
    Keyword,
    NumberLiteral,
    StringLiteral,
    CharLiteral,
    Comment,
    Whitespace,
    Operator,
    Punctuation,
}

impl TokenKind {
    pub const ALL: [TokenKind; 9] = [
        TokenKind::Identifier,
        TokenKind::Keyword,
        TokenKind::NumberLiteral,
        TokenKind::StringLiteral,
        TokenKind::CharLiteral,
        TokenKind::Comment,
        TokenKind::Whitespace,
        TokenKind::Operator,
        TokenKind::Punctuation,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TokenKind::Identifier => "Identifier",
            TokenKind::Keyword => "Keyword",
            TokenKind::NumberLiteral => "NumberLiteral",
            TokenKind::StringLiteral => "StringLiteral",
            TokenKind::CharLiteral => "CharLiteral",
            TokenKind::Comment => "Comment",
            TokenKind::Whitespace => "Whitespace",
            TokenKind::Operator => "Operator",
            TokenKind::Punctuation => "Punctuation",
        }
    }

    pub fn parse(name: &str) -> Option<TokenKind> {
        TokenKind::ALL.into_iter().find(|k| k.as_str() == name)
    }
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token<'a> {
    pub kind: TokenKind,
    pub text: &'a str,
    /// 1-based line of the first character.
    pub line: usize,
    /// 1-based column of the first character, counted in chars.
    pub column: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexWarning {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

// `true`, `false` and `null` are literals in the JLS but reserved words for
// our purposes; they are lexed as keywords.
const KEYWORDS: &[&str] = &[
    "abstract",
    "assert",
    "boolean",
    "break",
    "byte",
    "case",
    "catch",
    "char",
    "class",
    "const",
    "continue",
    "default",
    "do",
    "double",
    "else",
    "enum",
    "extends",
    "false",
    "final",
    "finally",
    "float",
    "for",
    "goto",
    "if",
    "implements",
    "import",
    "instanceof",
    "int",
    "interface",
    "long",
    "native",
    "new",
    "null",
    "package",
    "private",
    "protected",
    "public",
    "return",
    "short",
    "static",
    "strictfp",
    "super",
    "switch",
    "synchronized",
    "this",
    "throw",
    "throws",
    "transient",
    "true",
    "try",
    "void",
    "volatile",
    "while",
];

// Longest first, so the first prefix match is the maximal munch.
const OPERATORS: &[&str] = &[
    ">>>=", "<<=", ">>=", ">>>", "->", "++", "--", "&&", "||", "==", "!=", "<=", ">=", "+=", "-=",
    "*=", "/=", "&=", "|=", "^=", "%=", "<<", ">>", "=", ">", "<", "!", "~", "?", ":", "+", "-",
    "*", "/", "&", "|", "^", "%",
];

const SEPARATORS: &[&str] = &["...", "::", "(", ")", "{", "}", "[", "]", ";", ",", ".", "@"];

pub fn is_keyword(word: &str) -> bool {
    KEYWORDS.binary_search(&word).is_ok()
}

/// Tokenizes `source`, logging any warnings.
pub fn lex(source: &str) -> Vec<Token<'_>> {
    let (tokens, warnings) = lex_with_warnings(source);
    for w in warnings {
        log::warn!("{}:{}: {}", w.line, w.column, w.message);
    }
    tokens
}

pub fn lex_with_warnings(source: &str) -> (Vec<Token<'_>>, Vec<LexWarning>) {
    let mut lexer = Lexer {
        src: source,
        pos: 0,
        line: 1,
        column: 1,
        warnings: Vec::new(),
    };
    let mut tokens = Vec::new();
    while lexer.pos < source.len() {
        tokens.push(lexer.next_token());
    }
    (tokens, lexer.warnings)
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    column: usize,
    warnings: Vec<LexWarning>,
}

impl<'a> Lexer<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn next_token(&mut self) -> Token<'a> {
        let rest = self.rest();
        let (kind, len) = self.scan(rest);
        debug_assert!(len > 0);
        let text = &rest[..len];
        let token = Token {
            kind,
            text,
            line: self.line,
            column: self.column,
        };
        self.advance(text);
        token
    }

    fn advance(&mut self, text: &str) {
        for c in text.chars() {
            if c == '\n' {
                self.line += 1;
                self.column = 1;
            } else {
                self.column += 1;
            }
        }
        self.pos += text.len();
    }

    fn warn(&mut self, message: &str) {
        self.warnings.push(LexWarning {
            line: self.line,
            column: self.column,
            message: message.to_string(),
        });
    }

    fn scan(&mut self, rest: &str) -> (TokenKind, usize) {
        let bytes = rest.as_bytes();
        let first = rest.chars().next().expect("scan called at end of input");
        match first {
            ' ' => (
                TokenKind::Whitespace,
                bytes.iter().take_while(|&&b| b == b' ').count(),
            ),
            '\r' if bytes.get(1) == Some(&b'\n') => (TokenKind::Whitespace, 2),
            '\t' | '\n' | '\r' | '\x0c' => (TokenKind::Whitespace, 1),
            '/' if rest.starts_with("//") => {
                let len = rest.find(['\n', '\r']).unwrap_or(rest.len());
                (TokenKind::Comment, len)
            }
            '/' if rest.starts_with("/*") => match rest[2..].find("*/") {
                Some(end) => (TokenKind::Comment, end + 4),
                None => {
                    self.warn("unterminated block comment");
                    (TokenKind::Comment, rest.len())
                }
            },
            '"' => self.quoted(rest, '"', TokenKind::StringLiteral),
            '\'' => self.quoted(rest, '\'', TokenKind::CharLiteral),
            c if c.is_ascii_digit() => (TokenKind::NumberLiteral, number_len(rest)),
            '.' if bytes.get(1).is_some_and(u8::is_ascii_digit) => {
                (TokenKind::NumberLiteral, number_len(rest))
            }
            c if is_ident_start(c) => {
                let len = rest
                    .char_indices()
                    .find(|&(_, c)| !is_ident_part(c))
                    .map_or(rest.len(), |(i, _)| i);
                let kind = if is_keyword(&rest[..len]) {
                    TokenKind::Keyword
                } else {
                    TokenKind::Identifier
                };
                (kind, len)
            }
            _ => {
                if let Some(sep) = SEPARATORS.iter().find(|s| rest.starts_with(**s)) {
                    (TokenKind::Punctuation, sep.len())
                } else if let Some(op) = OPERATORS.iter().find(|s| rest.starts_with(**s)) {
                    (TokenKind::Operator, op.len())
                } else {
                    // Stray characters (`#`, backticks, control bytes, ...)
                    (TokenKind::Punctuation, first.len_utf8())
                }
            }
        }
    }

    fn quoted(&mut self, rest: &str, quote: char, kind: TokenKind) -> (TokenKind, usize) {
        let mut chars = rest.char_indices().skip(1);
        while let Some((i, c)) = chars.next() {
            if c == '\\' {
                chars.next();
            } else if c == quote {
                return (kind, i + 1);
            }
        }
        self.warn(if kind == TokenKind::StringLiteral {
            "unterminated string literal"
        } else {
            "unterminated char literal"
        });
        (kind, rest.len())
    }
}

fn is_ident_start(c: char) -> bool {
    c == '_' || c == '$' || c.is_alphabetic()
}

fn is_ident_part(c: char) -> bool {
    c == '_' || c == '$' || c.is_alphanumeric()
}

/// Length in bytes of the numeric literal at the start of `s`.
fn number_len(s: &str) -> usize {
    let b = s.as_bytes();
    let mut i = 0;
    let digits = |i: &mut usize, ok: fn(u8) -> bool| {
        while *i < b.len() && (ok(b[*i]) || b[*i] == b'_') {
            *i += 1;
        }
    };
    let exponent = |i: &mut usize, markers: &[u8]| {
        if *i < b.len() && markers.contains(&b[*i]) {
            let mut j = *i + 1;
            if j < b.len() && (b[j] == b'+' || b[j] == b'-') {
                j += 1;
            }
            if j < b.len() && b[j].is_ascii_digit() {
                *i = j;
                while *i < b.len() && (b[*i].is_ascii_digit() || b[*i] == b'_') {
                    *i += 1;
                }
            }
        }
    };

    if b.len() >= 2 && b[0] == b'0' && (b[1] == b'x' || b[1] == b'X') {
        i = 2;
        digits(&mut i, |c| c.is_ascii_hexdigit());
        if i < b.len() && b[i] == b'.' {
            i += 1;
            digits(&mut i, |c| c.is_ascii_hexdigit());
        }
        exponent(&mut i, b"pP");
    } else if b.len() >= 3
        && b[0] == b'0'
        && (b[1] == b'b' || b[1] == b'B')
        && (b[2] == b'0' || b[2] == b'1')
    {
        i = 2;
        digits(&mut i, |c| c == b'0' || c == b'1');
    } else {
        digits(&mut i, |c| c.is_ascii_digit());
        if i < b.len() && b[i] == b'.' {
            i += 1;
            digits(&mut i, |c| c.is_ascii_digit());
        }
        exponent(&mut i, b"eE");
    }
    if i < b.len() && b"lLfFdD".contains(&b[i]) {
        i += 1;
    }
    i
}

pub fn count_kinds(tokens: &[Token<'_>]) -> BTreeMap<TokenKind, usize> {
    let mut counts = BTreeMap::new();
    for t in tokens {
        *counts.entry(t.kind).or_insert(0) += 1;
    }
    counts
}

/// Debug dump: one token per line, `<kind>\t<escaped text>`.
pub fn dump(tokens: &[Token<'_>]) -> String {
    let mut out = String::new();
    for t in tokens {
        out.push_str(t.kind.as_str());
        out.push('\t');
        for c in t.text.chars() {
            match c {
                '\\' => out.push_str("\\\\"),
                '\t' => out.push_str("\\t"),
                '\n' => out.push_str("\\n"),
                '\r' => out.push_str("\\r"),
                c => out.push(c),
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use TokenKind::*;

    fn kinds_and_text(src: &str) -> Vec<(TokenKind, &str)> {
        lex(src).into_iter().map(|t| (t.kind, t.text)).collect()
    }

    #[test]
    fn keyword_table_is_sorted() {
        assert!(KEYWORDS.windows(2).all(|w| w[0] < w[1]));
        assert!(is_keyword("instanceof"));
        assert!(!is_keyword("String"));
    }

    #[test]
    fn simple_declaration() {
        assert_eq!(
            kinds_and_text("int x = 1;"),
            vec![
                (Keyword, "int"),
                (Whitespace, " "),
                (Identifier, "x"),
                (Whitespace, " "),
                (Operator, "="),
                (Whitespace, " "),
                (NumberLiteral, "1"),
                (Punctuation, ";"),
            ]
        );
    }

    #[test]
    fn line_comment_with_accent() {
        assert_eq!(kinds_and_text("// café"), vec![(Comment, "// café")]);
        assert_eq!(
            kinds_and_text("// a\nb"),
            vec![(Comment, "// a"), (Whitespace, "\n"), (Identifier, "b")]
        );
    }

    #[test]
    fn block_comment_and_javadoc() {
        assert_eq!(
            kinds_and_text("/** doc */x/**/"),
            vec![(Comment, "/** doc */"), (Identifier, "x"), (Comment, "/**/")]
        );
    }

    #[test]
    fn strings_with_escapes() {
        assert_eq!(
            kinds_and_text(r#""a \"b\" \\" + 'x' + '\''"#),
            vec![
                (StringLiteral, r#""a \"b\" \\""#),
                (Whitespace, " "),
                (Operator, "+"),
                (Whitespace, " "),
                (CharLiteral, "'x'"),
                (Whitespace, " "),
                (Operator, "+"),
                (Whitespace, " "),
                (CharLiteral, r"'\''"),
            ]
        );
    }

    #[test]
    fn unicode_escape_kept_literal() {
        let src = r"char c = '\u0041'; String s\u0030 = null;";
        let toks = lex(src);
        assert!(toks.iter().any(|t| t.kind == CharLiteral && t.text == r"'\u0041'"));
        let text: String = toks.iter().map(|t| t.text).collect();
        assert_eq!(text, src);
    }

    #[test]
    fn numeric_literals() {
        for lit in [
            "0", "42", "1_000_000", "0xFF", "0XdeadBEEFL", "0b1010", "3.14", "1e10", "1.5e-3f",
            ".5", "10L", "2d", "0x1.8p1", "1.",
        ] {
            assert_eq!(kinds_and_text(lit), vec![(NumberLiteral, lit)], "{lit}");
        }
        assert_eq!(
            kinds_and_text("a.b(1.0)"),
            vec![
                (Identifier, "a"),
                (Punctuation, "."),
                (Identifier, "b"),
                (Punctuation, "("),
                (NumberLiteral, "1.0"),
                (Punctuation, ")"),
            ]
        );
    }

    #[test]
    fn whitespace_granularity() {
        assert_eq!(
            kinds_and_text("  \t\t\r\n\n   "),
            vec![
                (Whitespace, "  "),
                (Whitespace, "\t"),
                (Whitespace, "\t"),
                (Whitespace, "\r\n"),
                (Whitespace, "\n"),
                (Whitespace, "   "),
            ]
        );
    }

    #[test]
    fn operators_are_maximal() {
        assert_eq!(
            kinds_and_text("a>>>=b->c::d..."),
            vec![
                (Identifier, "a"),
                (Operator, ">>>="),
                (Identifier, "b"),
                (Operator, "->"),
                (Identifier, "c"),
                (Punctuation, "::"),
                (Identifier, "d"),
                (Punctuation, "..."),
            ]
        );
    }

    #[test]
    fn identifiers_with_dollar_and_unicode() {
        assert_eq!(
            kinds_and_text("$x naïve_1"),
            vec![(Identifier, "$x"), (Whitespace, " "), (Identifier, "naïve_1")]
        );
    }

    #[test]
    fn unterminated_tokens_take_the_rest() {
        let (toks, warns) = lex_with_warnings("x = \"abc\ny;");
        assert_eq!(toks.last().unwrap().kind, StringLiteral);
        assert_eq!(toks.last().unwrap().text, "\"abc\ny;");
        assert_eq!(warns.len(), 1);

        let (toks, warns) = lex_with_warnings("/* open\n int a;");
        assert_eq!(toks.len(), 1);
        assert_eq!(toks[0].kind, Comment);
        assert_eq!(warns[0].line, 1);

        let (toks, _) = lex_with_warnings("'");
        assert_eq!(toks[0].kind, CharLiteral);
    }

    #[test]
    fn positions_are_tracked() {
        let toks = lex("a\n  bé c");
        let c = toks.iter().find(|t| t.text == "c").unwrap();
        assert_eq!((c.line, c.column), (2, 6));
    }

    #[test]
    fn count_kinds_of_declaration() {
        assert!(count_kinds(&[]).is_empty());
        let counts = count_kinds(&lex("int x = 1;"));
        let expected: BTreeMap<_, _> = [
            (Keyword, 1),
            (Identifier, 1),
            (Operator, 1),
            (NumberLiteral, 1),
            (Punctuation, 1),
            (Whitespace, 3),
        ]
        .into_iter()
        .collect();
        assert_eq!(counts, expected);
    }

    #[test]
    fn dump_escapes_control_chars() {
        assert_eq!(dump(&lex("a\t\\")), "Identifier\ta\nWhitespace\t\\t\nPunctuation\t\\\\\n");
    }

    proptest! {
        #[test]
        fn round_trip_arbitrary(src in "\\PC{0,200}") {
            let text: String = lex(&src).iter().map(|t| t.text).collect();
            prop_assert_eq!(text, src);
        }

        #[test]
        fn round_trip_java_alphabet(src in "[a-zA-Z0-9_$ \t\r\n\"'\\\\/*.+<>=(){};:xX]{0,300}") {
            let toks = lex(&src);
            prop_assert!(toks.iter().all(|t| !t.text.is_empty()));
            let text: String = toks.iter().map(|t| t.text).collect();
            prop_assert_eq!(text, src.clone());
            prop_assert_eq!(lex(&src), toks);
        }
    }
}
