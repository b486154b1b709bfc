//! Text formats for equation systems and word equations.
//!
//! Both formats are line-based. `#` immediately followed by a digit is a
//! base-element constant (`#3`); any other `#` starts a comment running to
//! the end of the line.

use crate::error::{Error, Result};
use crate::relational::words::{is_generated_variable, WordEquation, WordToken};
use crate::relational::{Atom, EquationSystem, Term};

/// Parses the equation DSL: one atom per line, `M(x, y, z)` relation atoms,
/// `x = y` equalities, `#3` base constants, `[0,1,1]` tuple constants.
pub fn parse_equations(input: &str) -> Result<EquationSystem> {
    let mut atoms = Vec::new();
    for (line_no, raw) in input.lines().enumerate() {
        let mut p = LineParser::new(raw, line_no + 1);
        p.skip_ws();
        if p.at_end() {
            continue;
        }
        atoms.push(p.atom()?);
        p.skip_ws();
        if !p.at_end() {
            return Err(p.error("unexpected trailing input after atom"));
        }
    }
    Ok(EquationSystem::new(atoms))
}

/// Parses the word DSL: one equation per line, products like
/// `x^-1 * y^-1 * x * y = 1`, constants as `#k`.
pub fn parse_words(input: &str) -> Result<Vec<WordEquation>> {
    let mut equations = Vec::new();
    for (line_no, raw) in input.lines().enumerate() {
        let mut p = LineParser::new(raw, line_no + 1);
        p.skip_ws();
        if p.at_end() {
            continue;
        }
        let lhs = p.word()?;
        p.skip_ws();
        if !p.eat('=') {
            return Err(p.error("expected '=' between the two sides"));
        }
        let rhs = p.word()?;
        p.skip_ws();
        if !p.at_end() {
            return Err(p.error("unexpected trailing input after equation"));
        }
        equations.push(WordEquation { lhs, rhs });
    }
    Ok(equations)
}

struct LineParser {
    chars: Vec<char>,
    pos: usize,
    line: usize,
}

impl LineParser {
    fn new(raw: &str, line: usize) -> Self {
        // Comment stripping honors the constant rule: '#' followed by a
        // digit stays part of the line.
        let chars: Vec<char> = raw.chars().collect();
        let mut end = chars.len();
        for i in 0..chars.len() {
            if chars[i] == '#' && !matches!(chars.get(i + 1), Some(c) if c.is_ascii_digit()) {
                end = i;
                break;
            }
        }
        LineParser {
            chars: chars[..end].to_vec(),
            pos: 0,
            line,
        }
    }

    fn error(&self, message: &str) -> Error {
        Error::parse(self.line, self.pos + 1, message)
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn eat(&mut self, want: char) -> bool {
        if self.peek() == Some(want) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, want: char, context: &str) -> Result<()> {
        if self.eat(want) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{want}' {context}")))
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse()
            .map_err(|_| Error::parse(self.line, start + 1, "number too large"))
    }

    fn ident(&mut self) -> Result<String> {
        let start = self.pos;
        if !matches!(self.peek(), Some(c) if c.is_alphabetic() || c == '_') {
            return Err(self.error("expected a name"));
        }
        while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn variable(&mut self) -> Result<String> {
        let start = self.pos;
        let name = self.ident()?;
        if is_generated_variable(&name) {
            return Err(Error::parse(
                self.line,
                start + 1,
                &format!("variable name '{name}' is reserved for generated partial products"),
            ));
        }
        Ok(name)
    }

    // Equation DSL pieces.

    fn atom(&mut self) -> Result<Atom> {
        self.skip_ws();
        match self.peek() {
            Some('#') | Some('[') => {
                let lhs = self.term()?;
                self.skip_ws();
                self.expect('=', "between the two sides")?;
                self.skip_ws();
                let rhs = self.term()?;
                Ok(Atom::Eq(lhs, rhs))
            }
            _ => {
                let start = self.pos;
                let name = self.ident()?;
                self.skip_ws();
                if self.eat('(') {
                    let mut args = vec![];
                    loop {
                        self.skip_ws();
                        args.push(self.term()?);
                        self.skip_ws();
                        match self.bump() {
                            Some(')') => break,
                            Some(',') => continue,
                            _ => {
                                return Err(self.error("expected ',' or ')' in argument list"))
                            }
                        }
                    }
                    Ok(Atom::Rel { name, args })
                } else {
                    if is_generated_variable(&name) {
                        return Err(Error::parse(
                            self.line,
                            start + 1,
                            &format!(
                                "variable name '{name}' is reserved for generated partial products"
                            ),
                        ));
                    }
                    self.expect('=', "between the two sides")?;
                    self.skip_ws();
                    let rhs = self.term()?;
                    Ok(Atom::Eq(Term::var(name), rhs))
                }
            }
        }
    }

    fn term(&mut self) -> Result<Term> {
        self.skip_ws();
        match self.peek() {
            Some('#') => {
                self.pos += 1;
                Ok(Term::base(self.number()?))
            }
            Some('[') => {
                self.pos += 1;
                let mut entries = vec![];
                loop {
                    self.skip_ws();
                    entries.push(self.number()?);
                    self.skip_ws();
                    match self.bump() {
                        Some(']') => break,
                        Some(',') => continue,
                        _ => return Err(self.error("expected ',' or ']' in tuple constant")),
                    }
                }
                Ok(Term::tuple(entries))
            }
            _ => Ok(Term::var(self.variable()?)),
        }
    }

    // Word DSL pieces.

    fn word(&mut self) -> Result<Vec<WordToken>> {
        let mut tokens = vec![self.factor()?];
        loop {
            self.skip_ws();
            if self.eat('*') {
                tokens.push(self.factor()?);
            } else {
                return Ok(tokens);
            }
        }
    }

    fn factor(&mut self) -> Result<WordToken> {
        self.skip_ws();
        match self.peek() {
            Some('#') => {
                self.pos += 1;
                let value = self.number()?;
                if self.inverse_suffix()? {
                    return Err(self.error("inverse applies to variables only"));
                }
                Ok(WordToken::Const(value))
            }
            Some('1') => {
                self.pos += 1;
                if matches!(self.peek(), Some(c) if c.is_alphanumeric()) {
                    return Err(self.error("unexpected characters after identity token '1'"));
                }
                if self.inverse_suffix()? {
                    return Err(self.error("inverse applies to variables only"));
                }
                Ok(WordToken::One)
            }
            Some(c) if c.is_ascii_digit() => {
                Err(self.error("bare numbers are not words; write constants as #k"))
            }
            _ => {
                let name = self.variable()?;
                if self.inverse_suffix()? {
                    Ok(WordToken::InvVar(name))
                } else {
                    Ok(WordToken::Var(name))
                }
            }
        }
    }

    /// Consumes `^-1` if present. Any other exponent is an error.
    fn inverse_suffix(&mut self) -> Result<bool> {
        let save = self.pos;
        self.skip_ws();
        if !self.eat('^') {
            self.pos = save;
            return Ok(false);
        }
        self.skip_ws();
        self.expect('-', "in exponent (only ^-1 is supported)")?;
        self.expect('1', "in exponent (only ^-1 is supported)")?;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            return Err(self.error("only the exponent -1 is supported"));
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lines(sys: &EquationSystem) -> Vec<String> {
        sys.atoms().iter().map(|a| a.to_string()).collect()
    }

    #[test]
    fn relation_equality_and_constants() {
        let sys = parse_equations("M(x, y, z)\nx = y\nM(x, #1, [0, 1, 1])\n#2 = y\n").unwrap();
        assert_eq!(
            lines(&sys),
            vec!["M(x, y, z)", "x = y", "M(x, #1, [0,1,1])", "#2 = y"]
        );
        assert_eq!(
            sys.variables(),
            &["x".to_string(), "y".into(), "z".into()]
        );
    }

    #[test]
    fn comments_and_blank_lines() {
        let input = "# full line comment\n\n  \nM(x,x,x) # trailing note\nx = #1\n";
        let sys = parse_equations(input).unwrap();
        assert_eq!(lines(&sys), vec!["M(x, x, x)", "x = #1"]);
    }

    #[test]
    fn hash_digit_is_a_constant_not_a_comment() {
        let sys = parse_equations("x = #0").unwrap();
        assert_eq!(lines(&sys), vec!["x = #0"]);
    }

    #[test]
    fn display_round_trips_through_the_parser() {
        let input = "M(x, #1, [0, 1, 1])\nI(x, y)\nE(z)\n[0, 1] = w\n";
        let sys = parse_equations(input).unwrap();
        let reparsed = parse_equations(&sys.to_string()).unwrap();
        assert_eq!(sys, reparsed);
    }

    #[test]
    fn equation_errors_carry_positions() {
        let err = parse_equations("M(x, y\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 1,
                col: 7,
                message: "expected ',' or ')' in argument list".into()
            }
        );
        let err = parse_equations("x = y\nM(x,) = z\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_equations("x y\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_equations("x = y z\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_equations("x = [0, 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn reserved_variables_rejected_in_equations() {
        let err = parse_equations("M(_t1, x, y)\n").unwrap_err();
        match err {
            Error::Parse { line: 1, col: 3, message } => {
                assert!(message.contains("reserved"), "{message}");
            }
            other => panic!("unexpected error {other:?}"),
        }
        let err = parse_equations("_t2 = x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, col: 1, .. }));
    }

    #[test]
    fn word_tokens_and_inverses() {
        let words = parse_words("x^-1 * y^-1 * x * y = 1\n").unwrap();
        assert_eq!(words.len(), 1);
        assert_eq!(
            words[0].lhs,
            vec![
                WordToken::InvVar("x".into()),
                WordToken::InvVar("y".into()),
                WordToken::Var("x".into()),
                WordToken::Var("y".into()),
            ]
        );
        assert_eq!(words[0].rhs, vec![WordToken::One]);
        assert_eq!(words[0].to_string(), "x^-1 * y^-1 * x * y = 1");
    }

    #[test]
    fn word_constants_and_spacing() {
        let words = parse_words("x * #2 = z\n  a ^-1 * b = #0\n").unwrap();
        assert_eq!(
            words[0].lhs,
            vec![WordToken::Var("x".into()), WordToken::Const(2)]
        );
        assert_eq!(words[0].rhs, vec![WordToken::Var("z".into())]);
        assert_eq!(
            words[1].lhs,
            vec![WordToken::InvVar("a".into()), WordToken::Var("b".into())]
        );
        assert_eq!(words[1].rhs, vec![WordToken::Const(0)]);
    }

    #[test]
    fn word_comments() {
        let words = parse_words("# setup\nx * y = y * x # commuting\n").unwrap();
        assert_eq!(words.len(), 1);
        assert_eq!(words[0].to_string(), "x * y = y * x");
    }

    #[test]
    fn word_errors() {
        assert!(matches!(
            parse_words("x^2 = y\n").unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
        assert!(matches!(
            parse_words("x^-12 = y\n").unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
        assert!(matches!(
            parse_words("2 * x = y\n").unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
        assert!(matches!(
            parse_words("x * y\n").unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
        assert!(matches!(
            parse_words("x * = y\n").unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
        assert!(matches!(
            parse_words("1^-1 = x\n").unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
        assert!(matches!(
            parse_words("#3^-1 = x\n").unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
        assert!(matches!(
            parse_words("_t1 = x\n").unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
    }

    #[test]
    fn identity_token_boundaries() {
        let words = parse_words("1 = x\n").unwrap();
        assert_eq!(words[0].lhs, vec![WordToken::One]);
        assert!(matches!(
            parse_words("1x = y\n").unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
        assert!(matches!(
            parse_words("10 = y\n").unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
    }
}
