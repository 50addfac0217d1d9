//! Formula printers: grammar round-trippable core syntax, sugared
//! syntax re-introducing `true`/`|`/`->`, and LaTeX.

use super::formula::{Formula, FormulaKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrintStyle {
    /// Core connectives only; `parse_formula(print(f)) == f`.
    Core,
    /// Core output with `true`, `|` and `->` recovered from their
    /// desugarings where the shape matches.
    Sugared,
    /// LaTeX math fragment using `\bot`, `\neg`, `\land`, `\Box`,
    /// `\Rightarrow` over the core connectives.
    Latex,
}

/// Binding strength used for parenthesization; loosest first.
#[derive(Clone, Copy, PartialEq, PartialOrd)]
enum Level {
    Imp = 1,
    Or = 2,
    And = 3,
    Cond = 4,
    Unary = 5,
    Atom = 6,
}

enum View<'a> {
    Core(&'a FormulaKind),
    True,
    Or(&'a Formula, &'a Formula),
    Imp(&'a Formula, &'a Formula),
}

fn view(f: &Formula, sugar: bool) -> View<'_> {
    if sugar {
        if let FormulaKind::Neg(inner) = f.kind() {
            if matches!(inner.kind(), FormulaKind::Bot) {
                return View::True;
            }
            if let FormulaKind::And(l, r) = inner.kind() {
                if let (FormulaKind::Neg(a), FormulaKind::Neg(b)) = (l.kind(), r.kind()) {
                    return View::Or(a, b);
                }
                if let FormulaKind::Neg(b) = r.kind() {
                    return View::Imp(l, b);
                }
            }
        }
    }
    View::Core(f.kind())
}

struct Printer {
    sugar: bool,
    latex: bool,
}

impl Printer {
    fn level(&self, f: &Formula) -> Level {
        match view(f, self.sugar) {
            View::True => Level::Atom,
            View::Or(_, _) => Level::Or,
            View::Imp(_, _) => Level::Imp,
            View::Core(kind) => match kind {
                FormulaKind::Bot | FormulaKind::Var(_) => Level::Atom,
                FormulaKind::Neg(_) | FormulaKind::Box(_) => Level::Unary,
                FormulaKind::And(_, _) => Level::And,
                FormulaKind::Cond(_, _) => Level::Cond,
            },
        }
    }

    fn print(&self, f: &Formula, min: Level, out: &mut String) {
        let lvl = self.level(f);
        let parens = lvl < min;
        if parens {
            out.push('(');
        }
        match view(f, self.sugar) {
            View::True => out.push_str(if self.latex { "\\top" } else { "true" }),
            View::Or(a, b) => {
                self.print(a, Level::Or, out);
                out.push_str(if self.latex { " \\lor " } else { " | " });
                self.print(b, Level::And, out);
            }
            View::Imp(a, b) => {
                self.print(a, Level::Or, out);
                out.push_str(if self.latex { " \\to " } else { " -> " });
                self.print(b, Level::Imp, out);
            }
            View::Core(kind) => match kind {
                FormulaKind::Bot => out.push_str(if self.latex { "\\bot" } else { "false" }),
                FormulaKind::Var(name) => out.push_str(name),
                FormulaKind::Neg(a) => {
                    out.push_str(if self.latex { "\\neg " } else { "~" });
                    self.print(a, Level::Unary, out);
                }
                FormulaKind::Box(a) => {
                    out.push_str(if self.latex { "\\Box " } else { "[]" });
                    self.print(a, Level::Unary, out);
                }
                FormulaKind::And(a, b) => {
                    self.print(a, Level::And, out);
                    out.push_str(if self.latex { " \\land " } else { " & " });
                    self.print(b, Level::Cond, out);
                }
                FormulaKind::Cond(a, b) => {
                    self.print(a, Level::Unary, out);
                    out.push_str(if self.latex { " \\Rightarrow " } else { " => " });
                    self.print(b, Level::Unary, out);
                }
            },
        }
        if parens {
            out.push(')');
        }
    }
}

pub fn print_formula(f: &Formula, style: PrintStyle) -> String {
    let printer = Printer {
        sugar: style == PrintStyle::Sugared,
        latex: style == PrintStyle::Latex,
    };
    let mut out = String::new();
    printer.print(f, Level::Imp, &mut out);
    out
}
