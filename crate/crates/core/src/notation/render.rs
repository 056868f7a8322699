use super::ast::{ConwayExpr, Elementary, TwistKind};

/// Binding strength of an expression's outermost operator.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Level {
    Ramification,
    Sum,
    Product,
    Atom,
}

fn level(e: &ConwayExpr) -> Level {
    match e {
        ConwayExpr::Ramification(_) | ConwayExpr::Polyhedral { .. } => Level::Ramification,
        ConwayExpr::Sum(..) => Level::Sum,
        ConwayExpr::Product(..) => Level::Product,
        _ => Level::Atom,
    }
}

/// Render a symbol. With `reduced` set, polyhedral slots holding `1` are
/// written with the colon shorthand and trailing `1` slots are dropped.
pub fn render(expr: &ConwayExpr, reduced: bool) -> String {
    let mut out = String::new();
    match expr {
        ConwayExpr::Polyhedral { vertices, index, slots } => {
            out.push_str(&vertices.to_string());
            out.push_str(&"*".repeat((*index).max(1)));
            let slots: Vec<String> = slots
                .iter()
                .map(|s| {
                    let mut buf = String::new();
                    write(s, Level::Sum, &mut buf);
                    buf
                })
                .collect();
            if reduced {
                out.push_str(&reduce_slots(slots));
            } else {
                out.push_str(&slots.join("."));
            }
        }
        e => write(e, Level::Ramification, &mut out),
    }
    out
}

fn reduce_slots(mut slots: Vec<String>) -> String {
    while slots.last().is_some_and(|s| s == "1") {
        slots.pop();
    }
    let joined = slots
        .iter()
        .map(|s| if s == "1" { "" } else { s.as_str() })
        .collect::<Vec<_>>()
        .join(".");
    joined.replace("..", ":")
}

fn write(e: &ConwayExpr, context: Level, out: &mut String) {
    if level(e) < context {
        out.push('(');
        write(e, Level::Ramification, out);
        out.push(')');
        return;
    }
    match e {
        ConwayExpr::Elementary(k) => out.push_str(match k {
            Elementary::Zero => "0",
            Elementary::Pos => "1",
            Elementary::Neg => "-1",
            Elementary::Pre => "i",
        }),
        ConwayExpr::Twist { kind, count } => match kind {
            TwistKind::Pos => out.push_str(&count.to_string()),
            TwistKind::Neg => {
                out.push('-');
                out.push_str(&count.to_string());
            }
            TwistKind::Pre => {
                out.push_str("i^");
                out.push_str(&count.to_string());
            }
        },
        ConwayExpr::Product(a, b) => {
            write(a, Level::Product, out);
            out.push(' ');
            // Right operand is grouped explicitly; the product is left associative.
            write(b, Level::Atom, out);
        }
        ConwayExpr::Sum(a, b) => {
            write(a, Level::Sum, out);
            out.push('+');
            write(b, Level::Product, out);
        }
        ConwayExpr::Ramification(items) => {
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write(item, Level::Sum, out);
            }
        }
        ConwayExpr::Mirror(a) => {
            out.push('-');
            match **a {
                ConwayExpr::Elementary(Elementary::Pre) => out.push('i'),
                _ => {
                    out.push('(');
                    write(a, Level::Ramification, out);
                    out.push(')');
                }
            }
        }
        ConwayExpr::Polyhedral { .. } => out.push_str(&render(e, false)),
    }
}
