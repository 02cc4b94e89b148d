use std::fmt::Write as _;

use crate::cone::InputSystem;
use crate::error::{Error, Result};
use crate::linalg::{Integer, Matrix};

#[derive(Clone, Debug)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

struct Lexer<'a> {
    tokens: Vec<Token<'a>>,
    pos: usize,
    end: (usize, usize),
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Lexer<'a> {
        let mut tokens = Vec::new();
        let mut end = (1, 1);
        for (i, line) in text.lines().enumerate() {
            let content = match line.find('#') {
                Some(c) => &line[..c],
                None => line,
            };
            let mut offset = 0;
            for word in content.split_whitespace() {
                let at = content[offset..].find(word).expect("word from this line") + offset;
                offset = at + word.len();
                tokens.push(Token {
                    text: word,
                    line: i + 1,
                    column: content[..at].chars().count() + 1,
                });
            }
            end = (i + 1, line.chars().count() + 1);
        }
        Lexer { tokens, pos: 0, end }
    }

    fn error(&self, expected: &str) -> Error {
        let (line, column) = match self.tokens.get(self.pos) {
            Some(t) => (t.line, t.column),
            None => self.end,
        };
        Error::Parse {
            line,
            column,
            expected: expected.to_string(),
        }
    }

    fn peek(&self) -> Option<&Token<'a>> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self, expected: &str) -> Result<Token<'a>> {
        let t = self.peek().cloned().ok_or_else(|| self.error(expected))?;
        self.pos += 1;
        Ok(t)
    }

    fn integer(&mut self) -> Result<Integer> {
        let t = self.peek().ok_or_else(|| self.error("an integer"))?;
        let v = t.text.parse::<Integer>().map_err(|_| self.error("an integer"))?;
        self.pos += 1;
        Ok(v)
    }

    fn count(&mut self) -> Result<usize> {
        let t = self.peek().ok_or_else(|| self.error("a row count"))?;
        let v = t.text.parse::<usize>().map_err(|_| self.error("a row count"))?;
        self.pos += 1;
        Ok(v)
    }

    fn row(&mut self, len: usize) -> Result<Vec<Integer>> {
        (0..len).map(|_| self.integer()).collect()
    }

    fn positive(&mut self, what: &str) -> Result<Integer> {
        let v = self.integer()?;
        if !v.is_positive() {
            self.pos -= 1;
            return Err(self.error(what));
        }
        Ok(v)
    }
}

/// Reads an input file.
///
/// ```text
/// amb_space 2
/// inequalities 1     # rows of amb_space integers, a·x >= 0
/// 2 1
/// grading
/// 0 1
/// ```
///
/// Further sections: `cone`, `equations`, `congruences` (last entry the
/// modulus), `vertices` (last entry a positive denominator),
/// `inhom_inequalities` and `inhom_equations` (last entry `b` in
/// `a·x + b >= 0` resp. `= 0`), `inhom_congruences` (`c·x + b ≡ 0 mod m`)
/// and `dehomogenization`.
pub fn parse_input(text: &str) -> Result<InputSystem> {
    let mut lx = Lexer::new(text);
    let key = lx.next("amb_space")?;
    if key.text != "amb_space" {
        lx.pos -= 1;
        return Err(lx.error("amb_space"));
    }
    let d = lx.count()?;
    let mut sys = InputSystem::new(d);
    while let Some(t) = lx.peek().cloned() {
        lx.pos += 1;
        match t.text {
            "grading" | "dehomogenization" => {
                let row = lx.row(d)?;
                let slot = if t.text == "grading" {
                    &mut sys.grading
                } else {
                    &mut sys.dehomogenization
                };
                if slot.is_some() {
                    lx.pos -= d + 1;
                    return Err(lx.error("a section not given before"));
                }
                *slot = Some(row);
            }
            "cone" | "inequalities" | "equations" | "congruences" | "vertices" | "inhom_inequalities"
            | "inhom_equations" | "inhom_congruences" => {
                let n = lx.count()?;
                for _ in 0..n {
                    let a = lx.row(d)?;
                    match t.text {
                        "cone" => sys.add_cone_ray(&a),
                        "inequalities" => sys.add_inequality(&a, Integer::ZERO),
                        "equations" => sys.add_equation(&a, Integer::ZERO),
                        "congruences" => {
                            let m = lx.positive("a positive modulus")?;
                            sys.add_congruence(&a, Integer::ZERO, m);
                        }
                        "vertices" => {
                            let den = lx.positive("a positive denominator")?;
                            sys.add_vertex(&a, den);
                        }
                        "inhom_inequalities" => sys.add_inequality(&a, -lx.integer()?),
                        "inhom_equations" => sys.add_equation(&a, -lx.integer()?),
                        "inhom_congruences" => {
                            let b = lx.integer()?;
                            let m = lx.positive("a positive modulus")?;
                            sys.add_congruence(&a, -b, m);
                        }
                        _ => unreachable!(),
                    }
                }
            }
            _ => {
                lx.pos -= 1;
                return Err(lx.error("a section keyword"));
            }
        }
    }
    sys.validate()?;
    Ok(sys)
}

fn write_rows(out: &mut String, key: &str, m: &Matrix, extra: &[Vec<Integer>]) {
    if m.nrows() == 0 {
        return;
    }
    let _ = writeln!(out, "{key} {}", m.nrows());
    for (i, r) in m.rows().enumerate() {
        let mut cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        cells.extend(extra.iter().map(|col| col[i].to_string()));
        let _ = writeln!(out, "{}", cells.join(" "));
    }
}

/// Writes a system in the input format; `parse_input` reads it back unchanged.
pub fn write_input(sys: &InputSystem) -> String {
    let mut out = format!("amb_space {}\n", sys.dim);
    let neg = |v: &[Integer]| v.iter().map(|x| -x).collect::<Vec<_>>();
    write_rows(&mut out, "cone", &sys.cone, &[]);
    write_rows(&mut out, "vertices", &sys.vertices, std::slice::from_ref(&sys.vertex_denominators));
    if sys.inequality_rhs.iter().all(Integer::is_zero) {
        write_rows(&mut out, "inequalities", &sys.inequalities, &[]);
    } else {
        write_rows(
            &mut out,
            "inhom_inequalities",
            &sys.inequalities,
            &[neg(&sys.inequality_rhs)],
        );
    }
    if sys.equation_rhs.iter().all(Integer::is_zero) {
        write_rows(&mut out, "equations", &sys.equations, &[]);
    } else {
        write_rows(&mut out, "inhom_equations", &sys.equations, &[neg(&sys.equation_rhs)]);
    }
    if sys.congruence_rhs.iter().all(Integer::is_zero) {
        write_rows(&mut out, "congruences", &sys.congruences, std::slice::from_ref(&sys.moduli));
    } else {
        write_rows(
            &mut out,
            "inhom_congruences",
            &sys.congruences,
            &[neg(&sys.congruence_rhs), sys.moduli.clone()],
        );
    }
    for (key, f) in [("grading", &sys.grading), ("dehomogenization", &sys.dehomogenization)] {
        if let Some(f) = f {
            let cells: Vec<String> = f.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(out, "{key}\n{}", cells.join(" "));
        }
    }
    out
}
