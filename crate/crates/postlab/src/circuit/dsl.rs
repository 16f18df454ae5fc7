//! The line-oriented circuit description language and its printer.
//!
//! ```text
//! # comment
//! base AND = tt 2 0b1000
//! base MAJ = (x & y) | (y & z) | (x & z)
//! input x1 x2 x3
//! g1 = MAJ(x1, x2, x3)
//! g2 = AND(g1, x1)
//! output g2
//! ```
//!
//! Truth-table literals list bit `i` of the table at binary digit `i`
//! (least significant last in the written literal). Formulas range over the
//! variables `x`, `y`, `z` and the connectives `! & | ^ ->` (Unicode
//! `¬ ∧ ∨ ⊕ →` accepted), with constants `0` and `1`.

use std::collections::HashMap;

use crate::boolfn::{TruthTable, MAX_ARITY};

use super::{Base, Circuit, CircuitError, Gate};

fn err(line: usize, col: usize, msg: impl Into<String>) -> CircuitError {
    CircuitError::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

/// Parse a circuit description.
pub fn parse(text: &str) -> Result<Circuit, CircuitError> {
    let mut base_funcs: Vec<(String, TruthTable)> = Vec::new();
    let mut variables: Vec<String> = Vec::new();
    let mut gates: Vec<Gate> = Vec::new();
    // name -> gate index, for variables and named gates
    let mut names: HashMap<String, usize> = HashMap::new();
    let mut output: Option<usize> = None;
    let mut saw_input = false;

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let col = content.len() - content.trim_start().len() + 1;

        if let Some(rest) = trimmed.strip_prefix("base ") {
            let (name, def) = rest
                .split_once('=')
                .ok_or_else(|| err(line, col, "expected `base NAME = ...`"))?;
            let name = name.trim();
            check_ident(name, line, col)?;
            if base_funcs.iter().any(|(n, _)| n == name) {
                return Err(err(line, col, format!("duplicate base function `{name}`")));
            }
            let def = def.trim();
            let table = if let Some(ttdef) = def.strip_prefix("tt ") {
                parse_tt_literal(ttdef.trim(), line, col)?
            } else {
                parse_formula(def).map_err(|msg| err(line, col, msg))?
            };
            base_funcs.push((name.to_string(), table));
        } else if let Some(rest) = trimmed.strip_prefix("input") {
            if saw_input {
                return Err(err(line, col, "duplicate input line"));
            }
            saw_input = true;
            for v in rest.split_whitespace() {
                check_ident(v, line, col)?;
                if names.contains_key(v) {
                    return Err(err(line, col, format!("duplicate variable `{v}`")));
                }
                variables.push(v.to_string());
                gates.push(Gate::Input(variables.len() - 1));
                names.insert(v.to_string(), gates.len() - 1);
            }
        } else if let Some(rest) = trimmed.strip_prefix("output") {
            if output.is_some() {
                return Err(err(line, col, "duplicate output line"));
            }
            let target = rest.trim();
            let idx = names
                .get(target)
                .copied()
                .ok_or_else(|| err(line, col, format!("undeclared identifier `{target}`")))?;
            output = Some(idx);
        } else {
            // gate line: NAME = FUNC(arg, ...)
            let (gate_name, call) = trimmed
                .split_once('=')
                .ok_or_else(|| err(line, col, "expected `gate = FUNC(args)`"))?;
            let gate_name = gate_name.trim();
            check_ident(gate_name, line, col)?;
            if names.contains_key(gate_name) || base_funcs.iter().any(|(n, _)| n == gate_name) {
                return Err(err(line, col, format!("duplicate identifier `{gate_name}`")));
            }
            let call = call.trim();
            let open = call
                .find('(')
                .ok_or_else(|| err(line, col, "expected `FUNC(args)`"))?;
            if !call.ends_with(')') {
                return Err(err(line, col, "missing closing parenthesis"));
            }
            let func_name = call[..open].trim();
            let func = base_funcs
                .iter()
                .position(|(n, _)| n == func_name)
                .ok_or_else(|| err(line, col, format!("undeclared function `{func_name}`")))?;
            let args_text = &call[open + 1..call.len() - 1];
            let mut args: Vec<usize> = Vec::new();
            for a in args_text.split(',') {
                let a = a.trim();
                if a.is_empty() {
                    continue;
                }
                let idx = names.get(a).copied().ok_or_else(|| {
                    err(
                        line,
                        col,
                        format!("undeclared identifier `{a}` (forward references make a cycle)"),
                    )
                })?;
                args.push(idx);
            }
            let expected = base_funcs[func].1.arity();
            if expected != args.len() {
                return Err(CircuitError::ArityMismatch {
                    gate: gate_name.to_string(),
                    expected,
                    got: args.len(),
                });
            }
            gates.push(Gate::Apply { func, args });
            names.insert(gate_name.to_string(), gates.len() - 1);
        }
    }

    let output = output.ok_or_else(|| err(text.lines().count(), 1, "missing output line"))?;
    Circuit::new(Base::new(base_funcs)?, variables, gates, output)
}

fn check_ident(s: &str, line: usize, col: usize) -> Result<(), CircuitError> {
    let mut chars = s.chars();
    let ok = match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {
            chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        }
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(err(line, col, format!("invalid identifier `{s}`")))
    }
}

fn parse_tt_literal(def: &str, line: usize, col: usize) -> Result<TruthTable, CircuitError> {
    let mut parts = def.split_whitespace();
    let arity: usize = parts
        .next()
        .and_then(|a| a.parse().ok())
        .ok_or_else(|| err(line, col, "expected `tt <arity> 0b<bits>`"))?;
    if arity > MAX_ARITY {
        return Err(err(line, col, format!("arity {arity} exceeds {MAX_ARITY}")));
    }
    let lit = parts
        .next()
        .ok_or_else(|| err(line, col, "missing bit literal"))?;
    if parts.next().is_some() {
        return Err(err(line, col, "trailing tokens after bit literal"));
    }
    let digits = lit
        .strip_prefix("0b")
        .ok_or_else(|| err(line, col, "bit literal must start with 0b"))?;
    let size = 1usize << arity;
    if digits.len() != size {
        return Err(err(
            line,
            col,
            format!("bit literal has {} digits, arity {arity} needs {size}", digits.len()),
        ));
    }
    // Written most-significant index first: digit k covers index size-1-k.
    let mut bits = vec![false; size];
    for (k, ch) in digits.chars().enumerate() {
        bits[size - 1 - k] = match ch {
            '0' => false,
            '1' => true,
            _ => return Err(err(line, col, format!("invalid bit digit `{ch}`"))),
        };
    }
    TruthTable::from_bits(arity, &bits).map_err(|e| err(line, col, e.to_string()))
}

// ---------------------------------------------------------------------------
// Formula sub-language for base definitions.

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Var(usize),
    Const(bool),
    Not,
    And,
    Or,
    Xor,
    Imp,
    LParen,
    RParen,
}

fn tokenize_formula(s: &str) -> Result<Vec<Tok>, String> {
    let mut toks = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        i += 1;
        match c {
            ' ' | '\t' => {}
            'x' => toks.push(Tok::Var(0)),
            'y' => toks.push(Tok::Var(1)),
            'z' => toks.push(Tok::Var(2)),
            '0' => toks.push(Tok::Const(false)),
            '1' => toks.push(Tok::Const(true)),
            '!' | '~' | '¬' => toks.push(Tok::Not),
            '&' | '∧' => toks.push(Tok::And),
            '|' | '∨' => toks.push(Tok::Or),
            '^' | '⊕' => toks.push(Tok::Xor),
            '→' => toks.push(Tok::Imp),
            '-' => {
                if i < chars.len() && chars[i] == '>' {
                    i += 1;
                    toks.push(Tok::Imp);
                } else {
                    return Err("stray `-` (use `->` for implication)".into());
                }
            }
            '(' => toks.push(Tok::LParen),
            ')' => toks.push(Tok::RParen),
            other => return Err(format!("unexpected character `{other}` in formula")),
        }
    }
    Ok(toks)
}

#[derive(Debug, Clone)]
enum Ast {
    Var(usize),
    Const(bool),
    Not(Box<Ast>),
    Bin(Tok, Box<Ast>, Box<Ast>),
}

struct FormulaParser {
    toks: Vec<Tok>,
    pos: usize,
}

// Precedence, tightest first: ! then & then ^ then | then -> (right
// associative).
impl FormulaParser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn atom(&mut self) -> Result<Ast, String> {
        match self.eat() {
            Some(Tok::Var(v)) => Ok(Ast::Var(v)),
            Some(Tok::Const(c)) => Ok(Ast::Const(c)),
            Some(Tok::Not) => Ok(Ast::Not(Box::new(self.atom()?))),
            Some(Tok::LParen) => {
                let e = self.imp()?;
                match self.eat() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err("missing closing parenthesis".into()),
                }
            }
            other => Err(format!("unexpected token {other:?} in formula")),
        }
    }

    fn conj(&mut self) -> Result<Ast, String> {
        let mut e = self.atom()?;
        while matches!(self.peek(), Some(Tok::And)) {
            self.eat();
            e = Ast::Bin(Tok::And, Box::new(e), Box::new(self.atom()?));
        }
        Ok(e)
    }

    fn xor(&mut self) -> Result<Ast, String> {
        let mut e = self.conj()?;
        while matches!(self.peek(), Some(Tok::Xor)) {
            self.eat();
            e = Ast::Bin(Tok::Xor, Box::new(e), Box::new(self.conj()?));
        }
        Ok(e)
    }

    fn disj(&mut self) -> Result<Ast, String> {
        let mut e = self.xor()?;
        while matches!(self.peek(), Some(Tok::Or)) {
            self.eat();
            e = Ast::Bin(Tok::Or, Box::new(e), Box::new(self.xor()?));
        }
        Ok(e)
    }

    fn imp(&mut self) -> Result<Ast, String> {
        let e = self.disj()?;
        if matches!(self.peek(), Some(Tok::Imp)) {
            self.eat();
            let rhs = self.imp()?;
            return Ok(Ast::Bin(Tok::Imp, Box::new(e), Box::new(rhs)));
        }
        Ok(e)
    }
}

fn ast_eval(ast: &Ast, args: &[bool]) -> bool {
    match ast {
        Ast::Var(v) => args[*v],
        Ast::Const(c) => *c,
        Ast::Not(e) => !ast_eval(e, args),
        Ast::Bin(op, a, b) => {
            let (a, b) = (ast_eval(a, args), ast_eval(b, args));
            match op {
                Tok::And => a && b,
                Tok::Or => a || b,
                Tok::Xor => a ^ b,
                Tok::Imp => !a || b,
                _ => unreachable!(),
            }
        }
    }
}

fn ast_max_var(ast: &Ast) -> usize {
    match ast {
        Ast::Var(v) => v + 1,
        Ast::Const(_) => 0,
        Ast::Not(e) => ast_max_var(e),
        Ast::Bin(_, a, b) => ast_max_var(a).max(ast_max_var(b)),
    }
}

/// Compile a formula over `x`, `y`, `z` into a truth table. The arity is
/// the highest variable used; lower unused variables stay fictive.
pub fn parse_formula(s: &str) -> Result<TruthTable, String> {
    let toks = tokenize_formula(s)?;
    if toks.is_empty() {
        return Err("empty formula".into());
    }
    let mut p = FormulaParser { toks, pos: 0 };
    let ast = p.imp()?;
    if p.pos != p.toks.len() {
        return Err("trailing tokens in formula".into());
    }
    let arity = ast_max_var(&ast);
    Ok(TruthTable::from_fn(arity, |args| ast_eval(&ast, args)))
}

// ---------------------------------------------------------------------------
// Printer.

/// Canonical description: base functions as truth-table literals, one input
/// line, gates named `g1..gk` in index order.
pub fn print(c: &Circuit) -> String {
    let mut out = String::new();
    for (name, table) in c.base.iter() {
        out.push_str(&format!("base {name} = {}\n", table.to_literal()));
    }
    if !c.variables().is_empty() {
        out.push_str("input");
        for v in c.variables() {
            out.push(' ');
            out.push_str(v);
        }
        out.push('\n');
    }
    // Gate names: variables keep their names, apply gates get g<k>.
    let mut gate_names: Vec<String> = Vec::with_capacity(c.gates().len());
    let mut next = 1usize;
    for g in c.gates() {
        match g {
            Gate::Input(v) => gate_names.push(c.variables()[*v].clone()),
            Gate::Apply { func, args } => {
                let name = format!("g{next}");
                next += 1;
                let rendered: Vec<&str> = args.iter().map(|&a| gate_names[a].as_str()).collect();
                out.push_str(&format!(
                    "{name} = {}({})\n",
                    c.base.name(*func),
                    rendered.join(", ")
                ));
                gate_names.push(name);
            }
        }
    }
    out.push_str(&format!("output {}\n", gate_names[c.output()]));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::Replacement;

    #[test]
    fn parse_and_evaluate() {
        let c = parse("base AND = tt 2 0b1000\ninput x1 x2\ng1 = AND(x1,x2)\noutput g1").unwrap();
        assert_eq!(c.num_vars(), 2);
        assert!(c.eval_bits(&[true, true]));
        assert!(!c.eval_bits(&[false, true]));
    }

    #[test]
    fn print_parse_round_trip() {
        let text = "base MAJ = (x&y)|(y&z)|(x&z)\nbase ONE = 1\ninput a b c\n\
                    g1 = MAJ(a, b, c)\ng2 = MAJ(g1, a, g1)\noutput g2";
        let c = parse(text).unwrap();
        let printed = c.print();
        let reparsed = parse(&printed).unwrap();
        assert_eq!(c, reparsed);
    }

    #[test]
    fn forward_reference_is_cycle_error() {
        let e = parse("base AND = tt 2 0b1000\ninput x1\ng1 = AND(g2, x1)\ng2 = AND(x1, x1)\noutput g1");
        assert!(matches!(e, Err(CircuitError::Parse { .. })));
    }

    #[test]
    fn arity_mismatch_rejected() {
        let e = parse("base AND = tt 2 0b1000\ninput x1\ng1 = AND(x1)\noutput g1");
        assert!(matches!(e, Err(CircuitError::ArityMismatch { .. })));
    }

    #[test]
    fn undeclared_identifier_rejected() {
        let e = parse("base AND = tt 2 0b1000\ninput x1\ng1 = AND(x1, q)\noutput g1");
        assert!(matches!(e, Err(CircuitError::Parse { .. })));
    }

    #[test]
    fn formula_bases() {
        let c = parse("base G = x & (y | !z)\ninput a b c\ng1 = G(a, b, c)\noutput g1").unwrap();
        let t = c.computed_table().unwrap();
        assert_eq!(t, crate::clones::standard_base(crate::CloneName::S12)[0]);

        let imp = parse_formula("x -> y").unwrap();
        assert_eq!(imp, TruthTable::from_fn(2, |a| !a[0] || a[1]));
        let unicode = parse_formula("x ∧ (y ∨ ¬z)").unwrap();
        assert_eq!(unicode, parse_formula("x & (y | !z)").unwrap());
    }

    #[test]
    fn zero_ary_calls() {
        let c = parse("base ONE = tt 0 0b1\ng1 = ONE()\noutput g1").unwrap();
        assert_eq!(c.num_vars(), 0);
        assert!(c.eval_bits(&[]));
    }

    #[test]
    fn print_after_substitution_round_trips() {
        let c = parse("base OR = x | y\ninput a b\ng1 = OR(a, b)\noutput g1").unwrap();
        let c0 = c.substitute("a", Replacement::Constant(true)).unwrap();
        let reparsed = parse(&c0.print()).unwrap();
        assert_eq!(c0.normalized(), reparsed);
        assert_eq!(reparsed, parse(&reparsed.print()).unwrap());
        for b in [false, true] {
            assert_eq!(c0.eval_bits(&[b]), reparsed.eval_bits(&[b]));
        }
    }

    #[test]
    fn output_may_be_a_variable() {
        let c = parse("base AND = tt 2 0b1000\ninput x1 x2\noutput x2").unwrap();
        assert!(c.eval_bits(&[false, true]));
        assert!(!c.eval_bits(&[true, false]));
    }
}
