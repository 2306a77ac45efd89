//! Pretty-printer. Re-parsing the output yields an equal [`Program`].

use std::fmt::Write as _;

use num_complex::Complex64;

use super::ast::{Program, Statement};

pub fn render(prog: &Program) -> String {
    let mut out = String::new();
    if let Some(m) = prog.model {
        let _ = writeln!(out, "model {m}");
    }
    for stmt in &prog.statements {
        let _ = writeln!(out, "{}", statement(stmt));
    }
    out
}

// `{}` on f64 prints the shortest decimal that parses back to the same value.
fn num(x: f64) -> String {
    format!("{x}")
}

fn cplx(z: Complex64) -> String {
    format!("({}, {})", num(z.re), num(z.im))
}

fn join<T: Copy>(items: &[T], f: fn(T) -> String) -> String {
    items.iter().map(|&x| f(x)).collect::<Vec<_>>().join(" ")
}

pub fn statement(stmt: &Statement) -> String {
    match stmt {
        Statement::DeclareAmps { id, amps, memb } => {
            format!(
                "qubit {id} amps {} memb {}",
                join(amps, cplx),
                join(memb, num)
            )
        }
        Statement::DeclareBloch {
            id,
            theta,
            phi,
            theta_mu,
        } => format!(
            "qubit {id} bloch {} {} {}",
            num(*theta),
            num(*phi),
            num(*theta_mu)
        ),
        Statement::DeclarePm { id, p, mu } => format!("qubit {id} pm {} {}", num(*p), num(*mu)),
        Statement::DeclareRegister { id, amps, memb } => {
            format!(
                "register {id} amps {} memb {}",
                join(amps, cplx),
                join(memb, num)
            )
        }
        Statement::Gate {
            quantum,
            membership,
            targets,
        } => {
            let name = match membership {
                Some(m) => format!("{quantum}/{m}"),
                None => quantum.to_string(),
            };
            format!("gate {name} on {}", targets.join(" "))
        }
        Statement::Project { projection, target } => format!("project {projection} on {target}"),
        Statement::Pair(a, b) => format!("pair {a} {b}"),
        Statement::Report(kind) => format!("report {}", kind.keyword()),
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse;
    use super::*;

    #[test]
    fn round_trip_examples() {
        let src = "# ps22-like\nmodel arc\nqubit a amps (0.6, -0.0) (0, 0.8) memb 1/3 0.9428090415820634\nqubit b bloch 1e-3 3.14159 2\npair a b\ngate H/NOT on a\ngate CNOT/SWAP on b a\nreport concurrence\n";
        let p = parse(src).unwrap();
        let text = render(&p);
        let q = parse(&text).unwrap();
        assert_eq!(p, q);
        assert_eq!(render(&q), text);
        assert!(text.contains("gate H/X on a"));
    }
}
