//! Statement-by-statement evaluation of a parsed [`Program`].

use num_complex::Complex64;

use super::ast::{Program, ReportKind, Statement};
use super::DslError;
use crate::entangle::{basis_label, tensor_two, TwoQubitRegister, LISTING_ORDER};
use crate::error::{Error, Result};
use crate::gates::{gate_from_names, GateName, ObscureQuantumGate};
use crate::kron::{BlockVector, KroneckerQubit, ObscureAmplitude};
use crate::matrix::ComplexMatrix;
use crate::membership::MembershipModel;
use crate::obscure::{BlochParams, ObscureQudit};
use crate::projection::{DoubleProjection, ProjectionName};
use crate::report::{ConcurrenceRecord, DensityEntry, ExpectationEntry, Listing, Report, Section};

/// Runs every statement in order. Reports are appended as encountered.
///
/// A projected qubit is kept unnormalized. It is renormalized (each block to
/// unit length) only when a later gate or `pair` consumes it, and every later
/// report on it carries a note saying so.
pub fn execute(prog: &Program, tol: f64) -> Result<Report, DslError> {
    let mut m = Machine {
        model: prog.effective_model(),
        tol,
        qubits: Vec::new(),
        register: None,
        report: Report::new(prog.effective_model()),
    };
    for (line, stmt) in prog.iter() {
        m.step(line, stmt)
            .map_err(|source| DslError::Runtime { line, source })?;
    }
    Ok(m.report)
}

enum QubitState {
    Ket(KroneckerQubit<f64>),
    Projected {
        block: BlockVector<f64>,
        projection: ProjectionName,
        line: usize,
    },
}

struct QubitSlot {
    name: String,
    state: QubitState,
    notes: Vec<String>,
}

struct RegisterSlot {
    label: String,
    /// Qubit names when built by `pair`, first qubit first.
    members: Option<(String, String)>,
    reg: TwoQubitRegister<f64>,
    notes: Vec<String>,
}

struct Machine {
    model: MembershipModel,
    tol: f64,
    qubits: Vec<QubitSlot>,
    register: Option<RegisterSlot>,
    report: Report,
}

fn check_user_alpha(values: &[f64]) -> Result<()> {
    for &a in values {
        if !(0.0..=1.0).contains(&a) {
            return Err(Error::range("membership amplitude", a, 0.0, 1.0));
        }
    }
    Ok(())
}

impl Machine {
    fn step(&mut self, line: usize, stmt: &Statement) -> Result<()> {
        match stmt {
            Statement::DeclareAmps { id, amps, memb } => {
                check_user_alpha(memb)?;
                let ket = KroneckerQubit::from_columns(*amps, *memb, self.tol)?;
                self.add_qubit(id, ket);
            }
            Statement::DeclareBloch {
                id,
                theta,
                phi,
                theta_mu,
            } => {
                let s = ObscureQudit::from_bloch(BlochParams::new(*theta, *phi, *theta_mu)?);
                let q = s.quantum();
                let a = s.membership();
                let ket = KroneckerQubit::from_columns([q[0], q[1]], [a[0], a[1]], self.tol)?;
                self.add_qubit(id, ket);
            }
            Statement::DeclarePm { id, p, mu } => {
                let ket = KroneckerQubit::from_prob_membership(*p, *mu, self.model)?;
                self.add_qubit(id, ket);
            }
            Statement::DeclareRegister { id, amps, memb } => {
                check_user_alpha(memb)?;
                let listed = [0, 1, 2, 3].map(|k| ObscureAmplitude::new(amps[k], memb[k]));
                let reg = TwoQubitRegister::from_listing(listed, self.tol)?;
                self.register = Some(RegisterSlot {
                    label: id.clone(),
                    members: None,
                    reg,
                    notes: Vec::new(),
                });
            }
            Statement::Gate {
                quantum,
                membership,
                targets,
            } => self.gate(line, *quantum, membership.unwrap_or(GateName::I), targets)?,
            Statement::Project { projection, target } => {
                let slot = self.qubit_mut(target)?;
                let p: DoubleProjection = projection.projection();
                let block = match &slot.state {
                    QubitState::Ket(k) => p.apply(k),
                    QubitState::Projected { block, .. } => p.apply_block(block),
                };
                slot.state = QubitState::Projected {
                    block,
                    projection: *projection,
                    line,
                };
            }
            Statement::Pair(a, b) => {
                let (x, nx) = self.take_ket(a, line)?;
                let (y, ny) = self.take_ket(b, line)?;
                self.qubits.retain(|s| s.name != *a && s.name != *b);
                self.register = Some(RegisterSlot {
                    label: format!("{a},{b}"),
                    members: Some((a.clone(), b.clone())),
                    reg: tensor_two(&x, &y),
                    notes: nx.into_iter().chain(ny).collect(),
                });
            }
            Statement::Report(kind) => {
                let section = self.section(*kind)?;
                self.report.push(section);
            }
        }
        Ok(())
    }

    fn add_qubit(&mut self, id: &str, ket: KroneckerQubit<f64>) {
        self.qubits.push(QubitSlot {
            name: id.to_string(),
            state: QubitState::Ket(ket),
            notes: Vec::new(),
        });
    }

    fn qubit_mut(&mut self, id: &str) -> Result<&mut QubitSlot> {
        self.qubits
            .iter_mut()
            .find(|s| s.name == id)
            .ok_or_else(|| Error::Domain(format!("{id} is not a free qubit")))
    }

    /// The qubit as a normalized ket, renormalizing a projected state.
    fn take_ket(&mut self, id: &str, line: usize) -> Result<(KroneckerQubit<f64>, Vec<String>)> {
        let tol = self.tol;
        let slot = self.qubit_mut(id)?;
        if let QubitState::Projected {
            block,
            projection,
            line: pline,
        } = &slot.state
        {
            let ket = block.renormalize(tol)?;
            slot.notes.push(format!(
                "{id} renormalized on line {line} after projection {projection} on line {pline}"
            ));
            slot.state = QubitState::Ket(ket);
        }
        match &slot.state {
            QubitState::Ket(k) => Ok((*k, slot.notes.clone())),
            QubitState::Projected { .. } => unreachable!("renormalized above"),
        }
    }

    fn gate(&mut self, line: usize, q: GateName, m: GateName, targets: &[String]) -> Result<()> {
        let gate = gate_from_names::<f64>(q, m)?;
        let op = match &self.register {
            Some(slot) => {
                let position = |id: &String| match &slot.members {
                    Some((a, _)) if a == id => Some(0),
                    Some((_, b)) if b == id => Some(1),
                    _ => None,
                };
                match targets {
                    [t] if *t == slot.label && slot.members.is_none() => Some(gate.clone()),
                    [t] => position(t).map(|pos| gate.lift(pos)).transpose()?,
                    [a, _] if position(a) == Some(0) => Some(gate.clone()),
                    [_, _] => Some(gate.reversed()?),
                    _ => None,
                }
            }
            None => None,
        };
        match op {
            Some(op) => {
                let slot = self.register.as_mut().expect("matched above");
                slot.reg = op.apply2(&slot.reg)?;
                Ok(())
            }
            None => self.gate_on_free(line, &gate, &targets[0]),
        }
    }

    fn gate_on_free(
        &mut self,
        line: usize,
        gate: &ObscureQuantumGate<f64>,
        id: &str,
    ) -> Result<()> {
        let (ket, _) = self.take_ket(id, line)?;
        let out = gate.apply(&ket)?;
        self.qubit_mut(id)?.state = QubitState::Ket(out);
        Ok(())
    }

    fn section(&self, kind: ReportKind) -> Result<Section> {
        let tol = self.tol;
        let one = || vec!["0".to_string(), "1".to_string()];
        let listing_labels = || {
            LISTING_ORDER
                .iter()
                .map(|&(i, j)| basis_label(i, j))
                .collect::<Vec<_>>()
        };
        Ok(match kind {
            ReportKind::Probs => {
                let mut out: Vec<Listing> = self
                    .qubits
                    .iter()
                    .map(|s| {
                        let (q, _) = columns(&s.state);
                        Listing::new(&s.name, one(), q.map(|z| z.norm_sqr())).with_notes(notes(s))
                    })
                    .collect();
                if let Some(r) = &self.register {
                    let b = r.reg.b();
                    let p = LISTING_ORDER.iter().map(|&(i, j)| b[i][j].norm_sqr());
                    out.push(
                        Listing::new(&r.label, listing_labels(), p).with_notes(r.notes.clone()),
                    );
                }
                Section::Probabilities(out)
            }
            ReportKind::Memb => {
                let mut out = Vec::new();
                for s in &self.qubits {
                    let (_, a) = columns(&s.state);
                    let mu = self.model.evaluate(&a, tol)?;
                    out.push(Listing::new(&s.name, one(), mu.into_vec()).with_notes(notes(s)));
                }
                if let Some(r) = &self.register {
                    let rep = r.reg.report(self.model, tol)?;
                    out.push(
                        Listing::new(&r.label, listing_labels(), rep.memberships())
                            .with_notes(r.notes.clone()),
                    );
                }
                Section::Memberships(out)
            }
            ReportKind::Density => {
                let mut out = Vec::new();
                for s in &self.qubits {
                    let rho = match &s.state {
                        QubitState::Ket(k) => k.density4(),
                        QubitState::Projected { block, .. } => ket_bra(&block.to_dense()),
                    };
                    out.push(DensityEntry::new(&s.name, &rho).with_notes(notes(s)));
                }
                if let Some(r) = &self.register {
                    out.push(
                        DensityEntry::new(&r.label, &ket_bra(&r.reg.to_dense()))
                            .with_notes(r.notes.clone()),
                    );
                }
                Section::Density(out)
            }
            ReportKind::Expect => Section::Expectations(
                self.qubits
                    .iter()
                    .map(|s| {
                        let block = match &s.state {
                            QubitState::Ket(k) => k.to_block(),
                            QubitState::Projected { block, .. } => *block,
                        };
                        let values = ProjectionName::ALL
                            .map(|n| (n, block.inner(&n.projection().apply_block(&block)).re));
                        ExpectationEntry::new(&s.name, values).with_notes(notes(s))
                    })
                    .collect(),
            ),
            ReportKind::Concurrence => {
                let r = self
                    .register
                    .as_ref()
                    .ok_or_else(|| Error::Domain("no two-qubit register to report on".into()))?;
                Section::Concurrence(ConcurrenceRecord::new(&r.label, r.reg.concurrence()))
            }
        })
    }
}

/// Bare columns of a qubit; a projected state is reported as is.
fn columns(state: &QubitState) -> ([Complex64; 2], [f64; 2]) {
    match state {
        QubitState::Ket(k) => (k.quantum(), k.membership()),
        QubitState::Projected { block, .. } => block.columns(),
    }
}

fn notes(slot: &QubitSlot) -> Vec<String> {
    let mut n = slot.notes.clone();
    if let QubitState::Projected {
        projection, line, ..
    } = &slot.state
    {
        n.push(format!(
            "unnormalized: projected by {projection} on line {line}"
        ));
    }
    n
}

fn ket_bra(ket: &[Complex64]) -> ComplexMatrix<f64> {
    let bra: Vec<_> = ket.iter().map(|z| z.conj()).collect();
    ComplexMatrix::outer(ket, &bra)
}

#[cfg(test)]
mod tests {
    use super::super::run;
    use super::*;
    use approx::assert_abs_diff_eq;

    const TOL: f64 = 1e-9;

    fn listing(report: &Report, idx: usize) -> &Listing {
        match &report.sections[idx] {
            Section::Probabilities(v) | Section::Memberships(v) => &v[0],
            other => panic!("not a listing: {other:?}"),
        }
    }

    #[test]
    fn identity_gate_keeps_basis_probabilities() {
        let r = run("qubit q0 pm 1 0\ngate I/I on q0\nreport probs", None, TOL).unwrap();
        assert_eq!(listing(&r, 0).values, vec![1.0, 0.0]);
    }

    #[test]
    fn arc_membership_after_h_x() {
        // pm(1/2, 1/2) under arc: α = (cos π/4, sin π/4); X swaps the entries,
        // so α is unchanged and the arc model returns (1/2, 1/2)
        let r = run(
            "model arc\nqubit q0 pm 1/2 1/2\ngate H/X on q0\nreport memb\nreport probs",
            None,
            TOL,
        )
        .unwrap();
        let mu = &listing(&r, 0).values;
        assert_abs_diff_eq!(mu[0], 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(mu[1], 0.5, epsilon = 1e-12);
        // H on (√½, √½) gives (1, 0)
        let p = &listing(&r, 1).values;
        assert_abs_diff_eq!(p[0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(p[1], 0.0, epsilon = 1e-12);
    }

    #[test]
    fn arc_rejects_negative_memberships_at_runtime() {
        let err = run(
            "model arc\nqubit q0 pm 1 1\n\ngate I/H on q0\nreport memb",
            None,
            TOL,
        )
        .unwrap_err();
        // α = (cos π/2, sin π/2) = (0, 1); H gives (1/√2, −1/√2)
        assert!(err.is_runtime());
        assert_eq!(err.line(), 5);
    }

    #[test]
    fn projection_is_reported_raw_then_renormalized() {
        let src = "qubit q0 amps (0.6,0) (0.8,0) memb 0.8 0.6\nproject P0 on q0\nreport probs\ngate I on q0\nreport probs";
        let r = run(src, None, TOL).unwrap();
        let raw = listing(&r, 0);
        assert_abs_diff_eq!(raw.values[0], 0.36, epsilon = 1e-12);
        assert_eq!(raw.values[1], 0.0);
        assert!(raw.notes[0].contains("unnormalized"));
        let after = listing(&r, 1);
        assert_abs_diff_eq!(after.values[0], 1.0, epsilon = 1e-12);
        assert!(after.notes[0].contains("renormalized on line 4 after projection P0 on line 2"));
    }

    #[test]
    fn renormalizing_a_vanished_block_is_a_runtime_error() {
        let err = run(
            "qubit q0 pm 1/2 1/2\nproject Q0 on q0\ngate H on q0",
            None,
            TOL,
        )
        .unwrap_err();
        assert!(err.is_runtime());
        assert_eq!(err.line(), 3);
    }

    #[test]
    fn user_memberships_must_be_in_unit_interval() {
        let err = run("qubit q0 amps (1,0) (0,0) memb -1 0", None, TOL).unwrap_err();
        assert!(matches!(
            err,
            DslError::Runtime {
                line: 1,
                source: Error::Range { .. }
            }
        ));
    }

    #[test]
    fn expectation_sums() {
        let r = run("qubit q0 bloch 1.1 0.3 2.0\nreport expect", None, TOL).unwrap();
        let Section::Expectations(e) = &r.sections[0] else {
            panic!()
        };
        let get = |n: &str| e[0].values.iter().find(|v| v.name == n).unwrap().value;
        assert_abs_diff_eq!(get("P0") + get("P1"), 1.0, epsilon = 1e-11);
        assert_abs_diff_eq!(get("P0"), get("Q0") + get("Q0mu"), epsilon = 1e-11);
        assert_abs_diff_eq!(get("P01"), get("Q0") + get("Q1mu"), epsilon = 1e-11);
    }

    #[test]
    fn paired_cnot_makes_bell_like_register() {
        let src = "qubit a amps (0.7071067811865476,0) (0.7071067811865476,0) memb 0.7071067811865476 0.7071067811865476
qubit b pm 1 1
pair a b
gate CNOT/CNOT on a b
report concurrence";
        let r = run(src, None, TOL).unwrap();
        let Section::Concurrence(c) = &r.sections[0] else {
            panic!()
        };
        assert_eq!((c.c_q, c.c_mu, c.c_scal), (1.0, 1.0, 1.0));
        assert_eq!(c.target, "a,b");
    }

    #[test]
    fn reversed_targets_swap_control() {
        let base = "qubit a pm 0 0\nqubit b pm 1 1\npair a b\n";
        // a = |1⟩ in both sectors, b = |0⟩: CNOT a→b flips b, CNOT b→a does nothing
        let forward = run(
            &format!("{base}gate CNOT/CNOT on a b\nreport probs"),
            None,
            TOL,
        )
        .unwrap();
        let back = run(
            &format!("{base}gate CNOT/CNOT on b a\nreport probs"),
            None,
            TOL,
        )
        .unwrap();
        // listing order 00', 10', 01', 11'
        assert_eq!(listing(&forward, 0).values, vec![0.0, 0.0, 0.0, 1.0]);
        assert_eq!(listing(&back, 0).values, vec![0.0, 1.0, 0.0, 0.0]);
    }

    #[test]
    fn deterministic() {
        let src = "model circle-square\nqubit q0 bloch 0.3 1.7 0.9\ngate H/Z on q0\nreport probs\nreport memb\nreport density\nreport expect";
        let a = run(src, None, TOL).unwrap();
        let b = run(src, None, TOL).unwrap();
        assert_eq!(a.to_json(), b.to_json());
    }
}
