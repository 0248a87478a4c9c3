//! Verification orchestration: runs every applicable check group on a
//! resolved spec and appends the golden expectations for catalog
//! geometries. Module errors become failing records, never panics.

use crate::clifford::{build_rep, restrict_rep};
use crate::emt;
use crate::error::Result;
use crate::foliation::{
    flow_emt, oneill, three_d_equivalence, transversal_connection, TransversalConnection,
};
use crate::frame::lie_derivative_metric;
use crate::linalg::{c, vec_norm, vec_sub};
use crate::report::VerificationReport;
use crate::sasaki::{
    check_sasaki_spinor_equations, check_sasakian, eta_einstein_fit, kahler_form_spinor,
    parallel_spinor_ricci_defect, standard_j, transversal_ricci_defect, xi_eigenbundle_rule_defect,
};
use crate::spec::{CheckGroup, ManifoldSpec, Resolved};
use crate::spinor_field::DerivSource;

/// Runs every selected check group and the catalog golden suite.
/// The report is deterministic for identical inputs and tolerance.
pub fn run_verification(spec: &ManifoldSpec, tol: f64) -> Result<VerificationReport> {
    let resolved = crate::spec::resolve(spec)?;
    let mut report = VerificationReport::new(&resolved.name, tol);
    for group in resolved.groups.clone() {
        match group {
            CheckGroup::Geometry => run_geometry(&mut report, &resolved),
            CheckGroup::Spinor => run_spinor(&mut report, &resolved),
            CheckGroup::Emt => run_emt(&mut report, &resolved),
            CheckGroup::Bounds => run_bounds(&mut report, &resolved),
            CheckGroup::Flow => run_flow(&mut report, &resolved),
            CheckGroup::Sasaki => run_sasaki(&mut report, &resolved),
        }
    }
    golden_checks(&mut report, &resolved);
    Ok(report)
}

fn has_group(r: &Resolved, g: CheckGroup) -> bool {
    r.groups.contains(&g)
}

fn run_geometry(report: &mut VerificationReport, r: &Resolved) {
    let Some(geo) = &r.geometry else {
        report.identity(
            "geometry.missing",
            "geometry checks requested without structure constants",
            f64::INFINITY,
        );
        return;
    };
    report.identity(
        "geometry.metric_compat",
        "connection is metric: Γ_ij^k + Γ_ik^j = 0",
        geo.conn.metric_compat_defect(),
    );
    report.identity(
        "geometry.torsion_free",
        "torsion matches brackets: Γ_ij^k − Γ_ji^k = c_ij^k",
        geo.conn.torsion_defect(&geo.manifold),
    );
    report.identity(
        "geometry.riemann_antisymmetry",
        "curvature antisymmetries in the first and last index pairs",
        geo.curv.symmetry_defect(),
    );
    report.identity(
        "geometry.first_bianchi",
        "cyclic sum of the curvature tensor vanishes",
        geo.curv.first_bianchi_defect(),
    );
    report.identity(
        "geometry.ricci_symmetry",
        "Ricci tensor is symmetric",
        geo.curv.ricci.max_abs_diff(&geo.curv.ricci.sym()),
    );
}

fn is_unimodular(geo: &crate::spec::Geometry) -> bool {
    let n = geo.manifold.n;
    (0..n).all(|j| (0..n).map(|i| geo.manifold.c(i, j, i)).sum::<f64>().abs() < 1e-12)
}

fn run_spinor(report: &mut VerificationReport, r: &Resolved) {
    if r.field.source == DerivSource::SpinConnection {
        let skew = r
            .field
            .deriv
            .iter()
            .map(|m| m.skew_hermiticity_defect())
            .fold(0.0, f64::max);
        report.identity(
            "spinor.connection_skew",
            "spin connection matrices are skew-hermitian",
            skew,
        );
        if let Some(geo) = &r.geometry {
            if is_unimodular(geo) {
                let d = crate::spinor_field::dirac(&r.field);
                report.identity(
                    "spinor.dirac_hermitian",
                    "Dirac matrix is hermitian on invariant spinors (unimodular frame)",
                    d.matrix.hermiticity_defect(),
                );
            }
        }
    }
    report.flag(
        "spinor.constant_norm",
        "all derivative prescriptions preserve the spinor norm",
        r.field.constant_norm,
        true,
    );
    match crate::spinor_field::rayleigh_eigencheck(&r.field, report.tol) {
        Ok(lambda) => {
            let d = crate::spinor_field::dirac(&r.field);
            let res = vec_norm(&vec_sub(
                &d.squared_value.components,
                &crate::linalg::vec_scale(&r.field.psi0.components, c(lambda, 0.0)),
            )) / r.field.psi0.norm();
            report.identity(
                "spinor.d_squared_eigen",
                "field is an eigenvector of the squared Dirac operator",
                res,
            );
        }
        Err(e) => report.error("spinor.d_squared_eigen", &e),
    }
}

fn run_emt(report: &mut VerificationReport, r: &Resolved) {
    match emt::emt_tensors(&r.field) {
        Ok(tensors) => {
            let t_direct = emt::emt_t_direct(&r.field).expect("same preconditions");
            let q_direct = emt::emt_q_direct(&r.field).expect("same preconditions");
            let split = tensors
                .t
                .max_abs_diff(&t_direct)
                .max(tensors.q.max_abs_diff(&q_direct));
            report.identity(
                "emt.split_direct",
                "symmetric/skew split agrees with the direct defining formulas",
                split,
            );
            report.identity(
                "emt.pythagoras",
                "|E|² = |T|² + |Q|² for the orthogonal split",
                (tensors.e.frob_sq() - tensors.t.frob_sq() - tensors.q.frob_sq()).abs(),
            );
        }
        Err(e) => report.error("emt.split_direct", &e),
    }
    match emt::trace_identity_defect(&r.field) {
        Ok(defect) => report.identity(
            "emt.trace_identity",
            "tr(T) equals the Rayleigh value of the Dirac operator",
            defect,
        ),
        Err(e) => report.error("emt.trace_identity", &e),
    }
    match emt::modified_connection_identity(&r.field) {
        Ok((lhs, rhs)) => report.identity(
            "emt.modified_connection",
            "modified-connection norm identity",
            (lhs - rhs).abs(),
        ),
        Err(e) => report.error("emt.modified_connection", &e),
    }
}

fn run_bounds(report: &mut VerificationReport, r: &Resolved) {
    match emt::check_bounds(&r.field, r.scal, r.flow.as_ref(), report.tol) {
        Ok(b) => {
            report.bound(
                "bounds.friedrich",
                "λ² dominates the scalar-curvature lower bound",
                b.lambda_sq,
                b.friedrich_rhs,
            );
            if b.emt_applicable {
                report.bound(
                    "bounds.emt",
                    "λ² dominates Scal/4 + |T|² (Dirac eigenspinor)",
                    b.lambda_sq,
                    b.emt_rhs,
                );
            }
            report.bound(
                "bounds.main",
                "λ² dominates Scal/4 + |T|² + |Q|²",
                b.lambda_sq,
                b.main_rhs,
            );
            if let (Some(full), Some(q_only)) = (b.flow_rhs, b.flow_rhs_q) {
                report.bound(
                    "bounds.flow",
                    "λ² dominates Scal/4 + |E_flow|²",
                    b.lambda_sq,
                    full,
                );
                report.bound(
                    "bounds.flow_q",
                    "λ² dominates Scal/4 + |E_flow|² restricted to the normal bundle",
                    b.lambda_sq,
                    q_only,
                );
            }
        }
        Err(e) => report.error("bounds", &e),
    }
}

fn transversal_of(r: &Resolved) -> Option<Result<TransversalConnection>> {
    let geo = r.geometry.as_ref()?;
    let flow = r.flow.as_ref()?;
    if !flow.riemannian {
        return None;
    }
    Some(transversal_connection(
        &r.field,
        flow,
        &geo.manifold,
        &geo.conn,
        r.scal,
        1e-12,
    ))
}

fn run_flow(report: &mut VerificationReport, r: &Resolved) {
    let (Some(geo), Some(flow)) = (&r.geometry, &r.flow) else {
        report.identity(
            "flow.missing",
            "flow checks requested without geometry and flow index",
            f64::INFINITY,
        );
        return;
    };
    report.identity(
        "flow.xi_column",
        "h(·, ξ) vanishes because ξ has unit length",
        flow.xi_column_defect,
    );
    if flow.riemannian {
        match oneill(&geo.manifold, flow) {
            Ok(o) => report.identity(
                "flow.oneill_bracket",
                "O'Neill values match half the normal bracket component",
                o.bracket_defect,
            ),
            Err(e) => report.error("flow.oneill_bracket", &e),
        }
    }
    match flow_emt(&r.field, flow) {
        Ok(fe) => {
            if let Some(d) = fe.t_lie_defect {
                report.identity(
                    "flow.t_lie",
                    "T_flow(Z,W) = −¼(L_ξ g)(Z,W) on the normal bundle",
                    d,
                );
            }
            if let Some(d) = fe.q_bracket_defect {
                report.identity(
                    "flow.q_bracket",
                    "Q_flow(Z,W) = ¼ g([Z,W], ξ) on the normal bundle",
                    d,
                );
            }
            if let Some(d) = fe.t_xi_defect {
                report.identity("flow.t_xi_mean_curvature", "T_flow(ξ,Z) = −¼ g(κ, Z)", d);
            }
            if let Some(d) = fe.q_oneill_defect {
                report.identity(
                    "flow.q_oneill",
                    "Q_flow matches half the O'Neill ξ-component",
                    d,
                );
            }
        }
        Err(e) => report.error("flow.emt", &e),
    }
    if let Some(trans) = transversal_of(r) {
        match trans {
            Ok(t) => {
                report.identity(
                    "flow.scal_q_cross",
                    "transversal scalar curvature agrees between curvature sum and divergence formula",
                    (t.scal_q_direct - t.scal_q_formula).abs(),
                );
                report.identity(
                    "flow.r_xi",
                    "transversal curvature annihilates the flow direction",
                    t.r_xi_defect,
                );
                if r.dim == 3 && flow.minimal {
                    match three_d_equivalence(&r.field, flow, &t, report.tol) {
                        Ok(td) => report.flag(
                            "flow.three_d_equivalence",
                            "transversal parallel spinors exist iff the Dirac equation at b/2 has a solution",
                            td.equivalence_consistent,
                            true,
                        ),
                        Err(e) => report.error("flow.three_d_equivalence", &e),
                    }
                }
            }
            Err(e) => report.error("flow.transversal", &e),
        }
    }
}

fn run_sasaki(report: &mut VerificationReport, r: &Resolved) {
    // Representation-level spectrum checks, independent of the input
    // geometry.
    if r.dim == 3 {
        match xi_eigenbundle_rule_defect(&r.rep, r.flow.as_ref().map(|f| f.xi + 1).unwrap_or(3)) {
            Ok(d) => report.identity(
                "sasaki.xi_sign_rule",
                "ξ acts as (−1)^{r+1}·i on the Kaehler-form eigenbundles",
                d,
            ),
            Err(e) => report.error("sasaki.xi_sign_rule", &e),
        }
        if let Ok(repq) = restrict_rep(&r.rep, r.flow.as_ref().map(|f| f.xi + 1).unwrap_or(3)) {
            match kahler_form_spinor(&repq, &standard_j(2)) {
                Ok(d) => {
                    report.identity(
                        "sasaki.omega_spectrum_m1",
                        "Kaehler form spectrum is {−i, i} with simple multiplicities",
                        d.spectrum_defect + d.multiplicity_defect() as f64,
                    );
                    report.identity(
                        "sasaki.omega_projectors_m1",
                        "eigenbundle projectors are orthogonal and resolve the identity",
                        d.projector_defect(),
                    );
                }
                Err(e) => report.error("sasaki.omega_spectrum_m1", &e),
            }
        }
    }
    match build_rep(4).and_then(|rep4| kahler_form_spinor(&rep4, &standard_j(4))) {
        Ok(d) => report.identity(
            "sasaki.omega_spectrum_m2",
            "rank-2 Kaehler form spectrum is {−2i, 0, 2i} with multiplicities {1, 2, 1}",
            d.spectrum_defect + d.multiplicity_defect() as f64 + d.projector_defect(),
        ),
        Err(e) => report.error("sasaki.omega_spectrum_m2", &e),
    }

    let (Some(geo), Some(flow)) = (&r.geometry, &r.flow) else {
        return;
    };
    match check_sasakian(&geo.manifold, &geo.conn, flow, r.ric.as_ref(), report.tol) {
        Ok(s) => {
            if s.sasakian {
                // Sasakian consequences: spinor equations with J = h,
                // and the transversal Ricci relation.
                match check_sasaki_spinor_equations(&r.field, flow) {
                    Ok(eqs) => {
                        if let Some(d) = eqs.omega_b_xi_residual {
                            report.identity(
                                "sasaki.omega_b_xi",
                                "Kaehler form acts as b·ξ on spinors",
                                d,
                            );
                        }
                    }
                    Err(e) => report.error("sasaki.omega_b_xi", &e),
                }
                if let (Some(Ok(t)), Some(ric)) = (transversal_of(r), r.ric.as_ref()) {
                    let m_half = (r.dim - 1) / 2;
                    let (qd, xd) = transversal_ricci_defect(ric, &t.ric_q, flow.xi, m_half);
                    report.identity(
                        "sasaki.transversal_ricci",
                        "Ric^∇ Z = Ric Z + 2Z on the normal bundle",
                        qd,
                    );
                    report.identity("sasaki.ricci_xi", "Ric ξ = 2m·ξ", xd);
                }
            }
        }
        Err(e) => report.error("sasaki.axioms", &e),
    }
}

/// Catalog golden values, parameterized where the worked example is.
fn golden_checks(report: &mut VerificationReport, r: &Resolved) {
    match r.name.as_str() {
        "nil3" => golden_nil3(report, r),
        "sol3" => golden_sol3(report, r),
        "s1xs2" => golden_s1xs2(report, r),
        "su2" => golden_su2(report, r),
        "t3" => golden_t3(report, r),
        _ => {}
    }
}

fn dirac_rayleigh(r: &Resolved) -> f64 {
    let d = crate::spinor_field::dirac(&r.field);
    crate::linalg::vec_inner(&d.value.components, &r.field.psi0.components).re
        / r.field.psi0.norm_sq()
}

fn dirac_residual_against(r: &Resolved, mu: f64) -> f64 {
    let d = crate::spinor_field::dirac(&r.field);
    vec_norm(&vec_sub(
        &d.value.components,
        &crate::linalg::vec_scale(&r.field.psi0.components, c(mu, 0.0)),
    )) / r.field.psi0.norm()
}

fn golden_nil3(report: &mut VerificationReport, r: &Resolved) {
    let Some(geo) = &r.geometry else { return };
    let tau = geo.manifold.c(0, 1, 2) / 2.0;
    let t2 = tau * tau;

    if has_group(r, CheckGroup::Geometry) {
        report.equality(
            "geometry.scal",
            "scalar curvature",
            geo.curv.scal,
            -2.0 * t2,
        );
        for (i, expected) in [(0, -2.0 * t2), (1, -2.0 * t2), (2, 2.0 * t2)] {
            report.equality(
                &format!("geometry.ricci_{}{}", i + 1, i + 1),
                "Ricci diagonal entry",
                geo.curv.ricci.get(i, i),
                expected,
            );
        }
        let mut offdiag = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    offdiag = offdiag.max(geo.curv.ricci.get(i, j).abs());
                }
            }
        }
        report.identity(
            "geometry.ricci_offdiag",
            "Ricci off-diagonal vanishes",
            offdiag,
        );
        let table = [
            ((0, 1, 2), tau, "gamma_123"),
            ((1, 2, 0), tau, "gamma_231"),
            ((0, 2, 1), -tau, "gamma_132"),
            ((1, 0, 2), -tau, "gamma_213"),
            ((2, 1, 0), tau, "gamma_321"),
            ((2, 0, 1), -tau, "gamma_312"),
        ];
        let mut rest = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    if !table
                        .iter()
                        .any(|((a, b, cc), _, _)| (*a, *b, *cc) == (i, j, k))
                    {
                        rest = rest.max(geo.conn.gamma(i, j, k).abs());
                    }
                }
            }
        }
        for ((i, j, k), expected, id) in table {
            report.equality(
                &format!("geometry.{id}"),
                "Christoffel symbol",
                geo.conn.gamma(i, j, k),
                expected,
            );
        }
        report.identity(
            "geometry.gamma_rest",
            "remaining Christoffel symbols vanish",
            rest,
        );
    }

    if has_group(r, CheckGroup::Spinor) {
        report.equality(
            "spinor.dirac_eigenvalue",
            "Dirac eigenvalue of the invariant field",
            dirac_rayleigh(r),
            -tau / 2.0,
        );
        report.identity(
            "spinor.dirac_value",
            "DΨ = −(τ/2)Ψ",
            dirac_residual_against(r, -tau / 2.0),
        );
        if let Ok(l) = crate::spinor_field::rayleigh_eigencheck(&r.field, report.tol) {
            report.equality("spinor.lambda_sq", "squared eigenvalue", l, t2 / 4.0);
        }
    }

    if has_group(r, CheckGroup::Emt) {
        if let Ok(tensors) = emt::emt_tensors(&r.field) {
            for (i, expected) in [(0, -tau / 2.0), (1, -tau / 2.0), (2, tau / 2.0)] {
                report.equality(
                    &format!("emt.t_{}{}", i + 1, i + 1),
                    "energy-momentum diagonal entry",
                    tensors.t.get(i, i),
                    expected,
                );
            }
            let mut offdiag = 0.0f64;
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        offdiag = offdiag.max(tensors.t.get(i, j).abs());
                    }
                }
            }
            report.identity("emt.t_offdiag", "T off-diagonal vanishes", offdiag);
            report.identity("emt.q_zero", "skew part vanishes", tensors.q.max_abs());
            report.equality(
                "emt.t_norm_sq",
                "|T|² = 3τ²/4",
                tensors.t.frob_sq(),
                0.75 * t2,
            );
            if let Ok(res) = emt::equality_residual(&r.field, &tensors.e) {
                report.identity(
                    "emt.limiting_case",
                    "field satisfies the limiting-case equation",
                    res,
                );
            }
        }
    }

    if has_group(r, CheckGroup::Bounds) {
        if let Ok(b) = emt::check_bounds(&r.field, r.scal, r.flow.as_ref(), report.tol) {
            report.equality("bounds.lambda_sq", "λ²", b.lambda_sq, t2 / 4.0);
            report.equality(
                "bounds.main_rhs",
                "Scal/4 + |T|² + |Q|² = τ²/4",
                b.main_rhs,
                t2 / 4.0,
            );
            report.flag(
                "bounds.main_equality",
                "main estimate is an equality",
                b.main_equality,
                true,
            );
            report.equality(
                "bounds.friedrich_rhs",
                "scalar-curvature bound value",
                b.friedrich_rhs,
                -0.75 * t2,
            );
            report.flag(
                "bounds.emt_applicable",
                "field is a Dirac eigenspinor, T-only bound applies",
                b.emt_applicable,
                true,
            );
            report.equality(
                "bounds.emt_rhs",
                "Scal/4 + |T|² = τ²/4",
                b.emt_rhs,
                t2 / 4.0,
            );
        }
    }

    if has_group(r, CheckGroup::Flow) {
        if let Some(flow) = &r.flow {
            report.flag(
                "flow.riemannian",
                "flow is Riemannian",
                flow.riemannian,
                true,
            );
            report.flag("flow.minimal", "flow is minimal", flow.minimal, true);
            report.equality(
                "flow.b",
                "h(e1) = b·e2 coefficient",
                flow.b.unwrap_or(f64::NAN),
                -tau,
            );
            report.equality("flow.h_12", "h(e1)·e2", flow.h.get(0, 1), -tau);
            report.equality("flow.h_21", "h(e2)·e1", flow.h.get(1, 0), tau);
            if let Ok(o) = oneill(&geo.manifold, flow) {
                report.equality(
                    "flow.oneill_a12",
                    "g(A_{e1}e2, ξ) = τ = ½ g([e1,e2], ξ)",
                    o.a_xi_component.get(0, 1),
                    tau,
                );
            }
            if let Ok(fe) = flow_emt(&r.field, flow) {
                report.equality(
                    "flow.q_psi_12",
                    "Q_flow(e1,e2) = τ/2",
                    fe.q.get(0, 1),
                    tau / 2.0,
                );
                report.equality(
                    "flow.q_psi_oneill",
                    "Q_flow(e1,e2) = −½ g(h(e1), e2)",
                    fe.q.get(0, 1),
                    -0.5 * flow.h.get(0, 1),
                );
            }
            if let Some(Ok(t)) = transversal_of(r) {
                report.equality(
                    "flow.kernel_dim",
                    "transversal parallel kernel dimension",
                    t.kernel_dim as f64,
                    2.0,
                );
                report.equality(
                    "flow.scal_q",
                    "transversal scalar curvature (curvature route)",
                    t.scal_q_direct,
                    0.0,
                );
                report.equality(
                    "flow.scal_q_formula",
                    "transversal scalar curvature (divergence route)",
                    t.scal_q_formula,
                    0.0,
                );
                if let Ok(td) = three_d_equivalence(&r.field, flow, &t, report.tol) {
                    report.equality("flow.three_d_b", "Dirac solution level b", td.b, -tau);
                    report.identity(
                        "flow.three_d_dirac",
                        "DΨ = (b/2)Ψ at unit norm",
                        td.dirac_residual,
                    );
                    report.identity(
                        "flow.d_tr",
                        "transversal Dirac operator annihilates the identified field",
                        td.d_tr_norm,
                    );
                }
            }
        }
    }

    if has_group(r, CheckGroup::Sasaki) {
        if let (Some(flow), Some(ric)) = (&r.flow, r.ric.as_ref()) {
            if let Ok(s) =
                check_sasakian(&geo.manifold, &geo.conn, flow, r.ric.as_ref(), report.tol)
            {
                report.flag(
                    "sasaki.unit_killing",
                    "ξ is a unit Killing field",
                    s.is_unit_killing,
                    true,
                );
                report.equality(
                    "sasaki.axiom1_residual",
                    "first Sasaki axiom residual is |1 − τ²|",
                    s.axiom1_residual,
                    (1.0 - t2).abs(),
                );
                report.equality(
                    "sasaki.axiom2_residual",
                    "second Sasaki axiom residual is |1 − τ²|",
                    s.axiom2_residual,
                    (1.0 - t2).abs(),
                );
                report.flag(
                    "sasaki.sasakian",
                    "manifold is Sasakian exactly at τ = 1",
                    s.sasakian,
                    (t2 - 1.0).abs() < 1e-12,
                );
            }
            if let Ok(fit) = eta_einstein_fit(ric, 2, 1, report.tol) {
                report.equality("sasaki.eta_beta", "eta-Einstein β", fit.beta, -2.0 * t2);
                report.equality("sasaki.eta_gamma", "eta-Einstein γ", fit.gamma, 4.0 * t2);
                report.equality(
                    "sasaki.eta_sum_defect",
                    "β + γ − 2m vanishes exactly at τ = 1",
                    fit.sum_defect,
                    2.0 * t2 - 2.0,
                );
            }
            if let Ok(eqs) = check_sasaki_spinor_equations(&r.field, flow) {
                report.identity(
                    "sasaki.spinor_xi_equation",
                    "∇_ξΨ = ½Ω·Ψ for the flow Kaehler structure",
                    eqs.xi_equation_residual,
                );
                report.identity(
                    "sasaki.spinor_q_equation",
                    "∇_ZΨ = ½ξ·h(Z)·Ψ on the normal bundle",
                    eqs.q_equation_residual,
                );
            }
            if (t2 - 1.0).abs() < 1e-12 {
                report.identity(
                    "sasaki.parallel_ricci",
                    "Ric Z = −2Z on Q and Ric ξ = 2m·ξ (transversal parallel spinor present)",
                    parallel_spinor_ricci_defect(ric, 2, 1),
                );
            }
        }
    }
}

fn golden_sol3(report: &mut VerificationReport, r: &Resolved) {
    let Some(geo) = &r.geometry else { return };

    if has_group(r, CheckGroup::Geometry) {
        report.equality("geometry.scal", "scalar curvature", geo.curv.scal, -2.0);
        report.equality(
            "geometry.ricci_33",
            "Ricci in the flow direction",
            geo.curv.ricci.get(2, 2),
            -2.0,
        );
        report.identity(
            "geometry.ricci_q",
            "Ricci vanishes on the normal directions",
            geo.curv
                .ricci
                .get(0, 0)
                .abs()
                .max(geo.curv.ricci.get(1, 1).abs()),
        );
        for ((i, j, k), expected, id) in [
            ((0, 0, 2), -1.0, "gamma_113"),
            ((1, 2, 1), -1.0, "gamma_232"),
            ((0, 2, 0), 1.0, "gamma_131"),
            ((1, 1, 2), 1.0, "gamma_223"),
        ] {
            report.equality(
                &format!("geometry.{id}"),
                "Christoffel symbol",
                geo.conn.gamma(i, j, k),
                expected,
            );
        }
    }

    if has_group(r, CheckGroup::Spinor) {
        let d = crate::spinor_field::dirac(&r.field);
        report.identity(
            "spinor.dirac_zero",
            "field is harmonic: D = 0",
            d.matrix.max_abs(),
        );
        if let Ok(l) = crate::spinor_field::rayleigh_eigencheck(&r.field, report.tol) {
            report.equality("spinor.lambda_sq", "squared eigenvalue", l, 0.0);
        }
    }

    if has_group(r, CheckGroup::Emt) {
        if let Ok(tensors) = emt::emt_tensors(&r.field) {
            report.equality("emt.t_12", "T(e1,e2) = −1/2", tensors.t.get(0, 1), -0.5);
            let mut diag = 0.0f64;
            for i in 0..3 {
                diag = diag.max(tensors.t.get(i, i).abs());
            }
            report.identity("emt.t_diag", "T diagonal vanishes", diag);
            report.equality("emt.t_norm_sq", "|T|² = 1/2", tensors.t.frob_sq(), 0.5);
            report.identity("emt.q_zero", "skew part vanishes", tensors.q.max_abs());
            if let Ok(res) = emt::equality_residual(&r.field, &tensors.e) {
                report.identity(
                    "emt.limiting_case",
                    "field satisfies the limiting-case equation",
                    res,
                );
            }
        }
    }

    if has_group(r, CheckGroup::Bounds) {
        if let Ok(b) = emt::check_bounds(&r.field, r.scal, r.flow.as_ref(), report.tol) {
            report.equality("bounds.lambda_sq", "λ²", b.lambda_sq, 0.0);
            report.equality(
                "bounds.main_rhs",
                "Scal/4 + |T|² + |Q|² = 0",
                b.main_rhs,
                0.0,
            );
            report.flag(
                "bounds.main_equality",
                "main estimate is an equality",
                b.main_equality,
                true,
            );
            report.equality(
                "bounds.friedrich_rhs",
                "scalar-curvature bound value",
                b.friedrich_rhs,
                -0.75,
            );
        }
    }

    if has_group(r, CheckGroup::Flow) {
        if let Some(flow) = &r.flow {
            report.flag(
                "flow.riemannian",
                "flow is not Riemannian",
                flow.riemannian,
                false,
            );
            report.flag("flow.minimal", "flow is minimal", flow.minimal, true);
            report.equality("flow.h_11", "h(e1)·e1", flow.h.get(0, 0), 1.0);
            report.equality("flow.h_22", "h(e2)·e2", flow.h.get(1, 1), -1.0);
            report.flag(
                "flow.oneill_rejected",
                "O'Neill tensor construction rejects the non-Riemannian flow",
                matches!(
                    oneill(&geo.manifold, flow),
                    Err(crate::error::SpinError::NonRiemannianFlow(_))
                ),
                true,
            );
            if let Ok(fe) = flow_emt(&r.field, flow) {
                report.equality(
                    "flow.t_psi_11",
                    "T_flow(e1,e1) = −1/2",
                    fe.t.get(0, 0),
                    -0.5,
                );
                let lie = lie_derivative_metric(&geo.conn, &[0.0, 0.0, 1.0]);
                report.equality(
                    "flow.t_psi_lie",
                    "T_flow(e1,e1) = −¼(L_ξ g)(e1,e1) via the independent metric route",
                    fe.t.get(0, 0),
                    -0.25 * lie.get(0, 0),
                );
                report.equality(
                    "flow.q_psi_12",
                    "Q_flow(e1,e2) = 0 = ¼ g([e1,e2], ξ)",
                    fe.q.get(0, 1),
                    0.0,
                );
            }
        }
    }

    if has_group(r, CheckGroup::Sasaki) {
        if let Some(flow) = &r.flow {
            if let Ok(s) =
                check_sasakian(&geo.manifold, &geo.conn, flow, r.ric.as_ref(), report.tol)
            {
                report.flag(
                    "sasaki.unit_killing",
                    "ξ is not Killing for the solvable geometry",
                    s.is_unit_killing,
                    false,
                );
            }
        }
    }
}

fn golden_s1xs2(report: &mut VerificationReport, r: &Resolved) {
    if has_group(r, CheckGroup::Spinor) {
        let d = crate::spinor_field::dirac(&r.field);
        let xi_psi = r.rep.gamma[0].mul_vec(&r.field.psi0.components);
        report.identity(
            "spinor.dirac_xi",
            "DΨ = ξ·Ψ",
            vec_norm(&vec_sub(&d.value.components, &xi_psi)) / r.field.psi0.norm(),
        );
        report.identity(
            "spinor.d_squared_one",
            "D²Ψ = Ψ",
            vec_norm(&vec_sub(
                &d.squared_value.components,
                &r.field.psi0.components,
            )) / r.field.psi0.norm(),
        );
        if let Ok(l) = crate::spinor_field::rayleigh_eigencheck(&r.field, report.tol) {
            report.equality("spinor.lambda_sq", "squared eigenvalue", l, 1.0);
        }
    }

    if has_group(r, CheckGroup::Emt) {
        if let Ok(tensors) = emt::emt_tensors(&r.field) {
            report.identity("emt.t_zero", "symmetric part vanishes", tensors.t.max_abs());
            report.equality(
                "emt.q_23",
                "Q on the sphere frame pair = −1/2",
                tensors.q.get(1, 2),
                -0.5,
            );
            report.equality("emt.q_norm_sq", "|Q|² = 1/2", tensors.q.frob_sq(), 0.5);
            if let Ok(res) = emt::equality_residual(&r.field, &tensors.e) {
                report.identity(
                    "emt.limiting_case",
                    "field satisfies the limiting-case equation",
                    res,
                );
            }
        }
    }

    if has_group(r, CheckGroup::Bounds) {
        if let Ok(b) = emt::check_bounds(&r.field, r.scal, None, report.tol) {
            report.equality("bounds.lambda_sq", "λ²", b.lambda_sq, 1.0);
            report.equality(
                "bounds.main_rhs",
                "Scal/4 + |T|² + |Q|² = 1",
                b.main_rhs,
                1.0,
            );
            report.flag(
                "bounds.main_equality",
                "main estimate is an equality",
                b.main_equality,
                true,
            );
            report.equality(
                "bounds.friedrich_rhs",
                "scalar-curvature bound value 3/4",
                b.friedrich_rhs,
                0.75,
            );
            report.equality(
                "bounds.friedrich_slack",
                "strict slack of the scalar-curvature bound",
                b.lambda_sq - b.friedrich_rhs,
                0.25,
            );
            report.flag(
                "bounds.emt_applicable",
                "T-only bound is inapplicable: DΨ is not proportional to Ψ",
                b.emt_applicable,
                false,
            );
        }
    }
}

fn golden_su2(report: &mut VerificationReport, r: &Resolved) {
    let Some(geo) = &r.geometry else { return };

    if has_group(r, CheckGroup::Geometry) {
        report.equality("geometry.scal", "scalar curvature", geo.curv.scal, 6.0);
        let mut ric_defect = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                let target = if i == j { 2.0 } else { 0.0 };
                ric_defect = ric_defect.max((geo.curv.ricci.get(i, j) - target).abs());
            }
        }
        report.identity("geometry.ricci_einstein", "Ricci = 2·Id", ric_defect);
        let mut sectional = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    sectional = sectional.max((geo.curv.riemann(i, j, j, i) - 1.0).abs());
                }
            }
        }
        report.identity(
            "geometry.sectional",
            "all frame sectional curvatures equal 1",
            sectional,
        );
    }

    if has_group(r, CheckGroup::Spinor) {
        report.equality(
            "spinor.dirac_eigenvalue",
            "Dirac eigenvalue of the Killing field",
            dirac_rayleigh(r),
            -1.5,
        );
        report.identity(
            "spinor.dirac_value",
            "DΨ = −(3/2)Ψ",
            dirac_residual_against(r, -1.5),
        );
        if let Ok(l) = crate::spinor_field::rayleigh_eigencheck(&r.field, report.tol) {
            report.equality("spinor.lambda_sq", "squared eigenvalue", l, 2.25);
        }
    }

    if has_group(r, CheckGroup::Emt) {
        if let Ok(tensors) = emt::emt_tensors(&r.field) {
            let mut diag_defect = 0.0f64;
            for i in 0..3 {
                diag_defect = diag_defect.max((tensors.t.get(i, i) + 0.5).abs());
            }
            report.identity(
                "emt.t_killing",
                "T = −½·Id for the Killing spinor",
                diag_defect,
            );
            report.equality("emt.t_norm_sq", "|T|² = 3/4", tensors.t.frob_sq(), 0.75);
            report.identity("emt.q_zero", "skew part vanishes", tensors.q.max_abs());
            if let Ok(res) = emt::equality_residual(&r.field, &tensors.e) {
                report.identity(
                    "emt.limiting_case",
                    "Killing spinor satisfies the limiting-case equation",
                    res,
                );
            }
        }
    }

    if has_group(r, CheckGroup::Bounds) {
        if let Ok(b) = emt::check_bounds(&r.field, r.scal, r.flow.as_ref(), report.tol) {
            report.equality("bounds.lambda_sq", "λ²", b.lambda_sq, 2.25);
            report.equality(
                "bounds.friedrich_rhs",
                "scalar-curvature bound value 9/4",
                b.friedrich_rhs,
                2.25,
            );
            report.flag(
                "bounds.friedrich_equality",
                "Killing spinor realizes the scalar-curvature bound",
                b.friedrich_equality,
                true,
            );
            report.equality(
                "bounds.main_rhs",
                "Scal/4 + |T|² + |Q|² = 9/4",
                b.main_rhs,
                2.25,
            );
            report.flag(
                "bounds.main_equality",
                "main estimate is an equality",
                b.main_equality,
                true,
            );
        }
    }

    if has_group(r, CheckGroup::Flow) {
        if let Some(flow) = &r.flow {
            report.flag(
                "flow.riemannian",
                "flow is Riemannian",
                flow.riemannian,
                true,
            );
            report.flag("flow.minimal", "flow is minimal", flow.minimal, true);
            report.equality(
                "flow.b",
                "h(e1) = b·e2 coefficient",
                flow.b.unwrap_or(f64::NAN),
                -1.0,
            );
            if let Ok(o) = oneill(&geo.manifold, flow) {
                report.equality(
                    "flow.oneill_a12",
                    "g(A_{e1}e2, ξ) = 1 = ½ g([e1,e2], ξ)",
                    o.a_xi_component.get(0, 1),
                    1.0,
                );
            }
            if let Some(Ok(t)) = transversal_of(r) {
                report.equality(
                    "flow.kernel_dim",
                    "no transversal parallel spinor on the round sphere",
                    t.kernel_dim as f64,
                    0.0,
                );
                report.equality(
                    "flow.scal_q",
                    "transversal scalar curvature (curvature route)",
                    t.scal_q_direct,
                    8.0,
                );
                report.equality(
                    "flow.scal_q_formula",
                    "transversal scalar curvature (divergence route)",
                    t.scal_q_formula,
                    8.0,
                );
                if let Ok(td) = three_d_equivalence(&r.field, flow, &t, report.tol) {
                    report.equality(
                        "flow.three_d_dirac_residual",
                        "DΨ − (b/2)Ψ has unit residual: no Dirac solution at level b/2",
                        td.dirac_residual,
                        1.0,
                    );
                    report.equality(
                        "flow.three_d_solution_dim",
                        "kernel of D − (b/2)·Id is trivial",
                        td.dirac_solution_dim as f64,
                        0.0,
                    );
                }
            }
        }
    }

    if has_group(r, CheckGroup::Sasaki) {
        if let (Some(flow), Some(ric)) = (&r.flow, r.ric.as_ref()) {
            if let Ok(s) =
                check_sasakian(&geo.manifold, &geo.conn, flow, r.ric.as_ref(), report.tol)
            {
                report.flag(
                    "sasaki.sasakian",
                    "round sphere is Sasakian",
                    s.sasakian,
                    true,
                );
                report.identity(
                    "sasaki.axiom1_residual",
                    "first axiom holds",
                    s.axiom1_residual,
                );
                report.identity(
                    "sasaki.axiom2_residual",
                    "second axiom holds",
                    s.axiom2_residual,
                );
            }
            if let Ok(fit) = eta_einstein_fit(ric, 2, 1, report.tol) {
                report.equality("sasaki.eta_beta", "eta-Einstein β", fit.beta, 2.0);
                report.equality("sasaki.eta_gamma", "eta-Einstein γ", fit.gamma, 0.0);
                report.identity("sasaki.eta_sum_defect", "β + γ = 2m", fit.sum_defect.abs());
            }
            if let Ok(eqs) = check_sasaki_spinor_equations(&r.field, flow) {
                report.equality(
                    "sasaki.spinor_xi_equation",
                    "Killing field is not transversally parallel: unit ξ-equation residual",
                    eqs.xi_equation_residual,
                    1.0,
                );
                report.identity(
                    "sasaki.spinor_q_equation",
                    "normal-direction spinor equation still holds",
                    eqs.q_equation_residual,
                );
            }
        }
    }
}

fn golden_t3(report: &mut VerificationReport, r: &Resolved) {
    let Some(geo) = &r.geometry else { return };

    if has_group(r, CheckGroup::Geometry) {
        report.equality(
            "geometry.scal",
            "flat torus scalar curvature",
            geo.curv.scal,
            0.0,
        );
        report.identity(
            "geometry.ricci_zero",
            "Ricci vanishes",
            geo.curv.ricci.max_abs(),
        );
    }
    if has_group(r, CheckGroup::Spinor) {
        let d = crate::spinor_field::dirac(&r.field);
        report.identity(
            "spinor.dirac_zero",
            "parallel spinors are harmonic",
            d.matrix.max_abs(),
        );
        if let Ok(l) = crate::spinor_field::rayleigh_eigencheck(&r.field, report.tol) {
            report.equality("spinor.lambda_sq", "squared eigenvalue", l, 0.0);
        }
    }
    if has_group(r, CheckGroup::Emt) {
        if let Ok(tensors) = emt::emt_tensors(&r.field) {
            report.identity(
                "emt.all_zero",
                "energy-momentum tensors vanish",
                tensors.e.max_abs(),
            );
        }
    }
    if has_group(r, CheckGroup::Bounds) {
        if let Ok(b) = emt::check_bounds(&r.field, r.scal, r.flow.as_ref(), report.tol) {
            report.equality("bounds.lambda_sq", "λ²", b.lambda_sq, 0.0);
            report.equality("bounds.main_rhs", "all bound terms vanish", b.main_rhs, 0.0);
            report.flag(
                "bounds.main_equality",
                "main estimate is an equality",
                b.main_equality,
                true,
            );
        }
    }
    if has_group(r, CheckGroup::Flow) {
        if let Some(flow) = &r.flow {
            report.flag(
                "flow.riemannian",
                "flow is Riemannian",
                flow.riemannian,
                true,
            );
            report.flag("flow.minimal", "flow is minimal", flow.minimal, true);
            report.equality("flow.b", "b = 0", flow.b.unwrap_or(f64::NAN), 0.0);
            report.identity("flow.h_zero", "Weingarten map vanishes", flow.h.max_abs());
            if let Some(Ok(t)) = transversal_of(r) {
                report.equality(
                    "flow.kernel_dim",
                    "every invariant spinor is transversally parallel",
                    t.kernel_dim as f64,
                    2.0,
                );
                report.equality(
                    "flow.scal_q",
                    "flat transversal geometry",
                    t.scal_q_direct,
                    0.0,
                );
                if let Ok(td) = three_d_equivalence(&r.field, flow, &t, report.tol) {
                    report.identity("flow.three_d_dirac", "DΨ = (b/2)Ψ = 0", td.dirac_residual);
                    report.equality(
                        "flow.three_d_solution_dim",
                        "every invariant spinor solves the Dirac equation at level 0",
                        td.dirac_solution_dim as f64,
                        2.0,
                    );
                }
            }
        }
    }
    if has_group(r, CheckGroup::Sasaki) {
        if let Some(flow) = &r.flow {
            if let Ok(s) =
                check_sasakian(&geo.manifold, &geo.conn, flow, r.ric.as_ref(), report.tol)
            {
                report.flag(
                    "sasaki.unit_killing",
                    "parallel ξ is Killing",
                    s.is_unit_killing,
                    true,
                );
                report.equality(
                    "sasaki.axiom1_residual",
                    "flat torus violates the first axiom by exactly 1",
                    s.axiom1_residual,
                    1.0,
                );
                report.flag(
                    "sasaki.sasakian",
                    "flat torus is not Sasakian",
                    s.sasakian,
                    false,
                );
            }
            if let Some(ric) = r.ric.as_ref() {
                if let Ok(fit) = eta_einstein_fit(ric, 2, 1, report.tol) {
                    report.equality(
                        "sasaki.eta_sum_defect",
                        "flat torus fits the pattern with β + γ − 2m = −2",
                        fit.sum_defect,
                        -2.0,
                    );
                }
            }
        }
    }
}
