use super::*;
use crate::codes::RegenCode;

fn sys_mbr_322() -> LinearSystem {
    register_system(&RegenCode::build_pm_mbr(3, 2, 2, 1).unwrap()).unwrap()
}

fn sys_src_3221() -> LinearSystem {
    register_system(&RegenCode::build_src(3, 2, 2, 1, 1).unwrap()).unwrap()
}

fn sys_src_4331() -> LinearSystem {
    register_system(&RegenCode::build_src(4, 3, 3, 1, 1).unwrap()).unwrap()
}

#[test]
fn resolve_u_patterns() {
    let sys = sys_mbr_322();
    assert_eq!(
        resolve_pattern(&sys, &VarSetPattern::U { t: 0, s: 0 }).unwrap(),
        vec![]
    );
    assert_eq!(
        resolve_pattern(&sys, &VarSetPattern::U { t: 0, s: 2 }).unwrap(),
        vec![
            VarName::Repair(2, 1),
            VarName::Repair(3, 1),
            VarName::Repair(3, 2)
        ]
    );
    assert_eq!(
        resolve_pattern(&sys, &VarSetPattern::U { t: 1, s: 2 }).unwrap(),
        vec![VarName::Node(1), VarName::Repair(3, 2)]
    );
    assert!(resolve_pattern(&sys, &VarSetPattern::U { t: 1, s: 4 }).is_err());
}

#[test]
fn resolve_refuses_u_when_n_exceeds_d_plus_1() {
    let sys = register_system(&RegenCode::build_pm_mbr(5, 3, 3, 1).unwrap()).unwrap();
    assert!(resolve_pattern(&sys, &VarSetPattern::U { t: 0, s: 2 }).is_err());
    // Non-triangular patterns still resolve.
    assert!(resolve_pattern(&sys, &VarSetPattern::SInto(vec![1])).is_ok());
}

#[test]
fn closure_holds_everywhere() {
    for sys in [sys_mbr_322(), sys_src_3221(), sys_src_4331()] {
        let n = sys.n();
        for s in 1..=n {
            for t in 0..s {
                let rep = check_closure(&sys, sys.d(), t, s).unwrap();
                assert!(rep.pass, "{}", rep.render_line());
            }
        }
    }
}

#[test]
fn closure_rejects_t_equal_s() {
    let sys = sys_mbr_322();
    assert!(check_closure(&sys, 2, 2, 2).is_err());
}

#[test]
fn closure_monotonicity_consequence() {
    // H(U(t2,s)) <= H(U(t1,s)) for t1 <= t2: the lower-t collection
    // determines the higher-t one.
    for sys in [sys_src_3221(), sys_src_4331()] {
        for s in 1..=sys.n() {
            for t1 in 0..s {
                for t2 in t1..s {
                    let h1 = sys.joint_entropy(&u_pattern(&sys, t1, s).unwrap()).unwrap();
                    let h2 = sys.joint_entropy(&u_pattern(&sys, t2, s).unwrap()).unwrap();
                    assert!(h2 <= h1, "s={s} t1={t1} t2={t2}");
                }
            }
        }
    }
}

#[test]
fn exchange_passes_on_mbr_322() {
    let sys = sys_mbr_322();
    let rep = check_exchange(&sys, 2, 1, 0, 0, 1).unwrap();
    assert!(rep.pass, "{}", rep.render_line());
    assert!(!rep.slack.is_negative());
}

#[test]
fn exchange_equality_when_j_is_m_plus_1() {
    for sys in [sys_src_3221(), sys_src_4331()] {
        let d = sys.d();
        for m in 1..d {
            for i in 0..m {
                // j = m+1 forces i' = i.
                let rep = check_exchange(&sys, d, m, i, i, m + 1).unwrap();
                assert!(rep.slack.is_zero(), "{}", rep.render_line());
            }
        }
    }
}

#[test]
fn exchange_sweep_on_src_4331() {
    let sys = sys_src_4331();
    let d = 3;
    for m in 1..d {
        for i in 0..m {
            for i_prime in 0..=i {
                for j in i_prime + 1..=m - i + i_prime + 1 {
                    let rep = check_exchange(&sys, d, m, i, i_prime, j).unwrap();
                    assert!(rep.pass, "{}", rep.render_line());
                }
            }
        }
    }
}

#[test]
fn exchange_rejects_bad_ranges() {
    let sys = sys_src_4331();
    assert!(check_exchange(&sys, 3, 3, 0, 0, 1).is_err()); // m = d
    assert!(check_exchange(&sys, 3, 1, 1, 0, 1).is_err()); // i = m
    assert!(check_exchange(&sys, 3, 2, 1, 0, 3).is_err()); // j too large
}

#[test]
fn corollaries_pass() {
    let sys = sys_mbr_322();
    for rep in check_exchange_chains(&sys, 2, 0, 1).unwrap() {
        assert!(rep.pass, "{}", rep.render_line());
    }
    let sys = sys_src_4331();
    for ell in 0..3 {
        for m in ell + 1..3 {
            for rep in check_exchange_chains(&sys, 3, ell, m).unwrap() {
                assert!(rep.pass, "{}", rep.render_line());
            }
        }
    }
}

#[test]
fn bound_chains_pass_on_single_level_src() {
    let code = RegenCode::build_src(3, 2, 2, 1, 1).unwrap();
    let sys = register_system(&code).unwrap();
    for rep in check_bound_chains(&sys, code.spec()).unwrap() {
        assert!(rep.pass, "{}", rep.render_line());
    }
}

#[test]
fn bound_chains_pass_on_two_level_composite() {
    let mut betas = std::collections::BTreeMap::new();
    betas.insert(2, 1usize);
    betas.insert(3, 1usize);
    let code = RegenCode::build_multilevel(4, 3, 1, &betas).unwrap();
    let sys = register_system(&code).unwrap();
    for rep in check_bound_chains(&sys, code.spec()).unwrap() {
        assert!(rep.pass, "{}", rep.render_line());
    }
}

#[test]
fn bound_chains_pass_on_keys_only_baseline() {
    // With every message size zero the message terms vanish on both sides.
    let code = RegenCode::build_keys_only(4, 3, 1, 1).unwrap();
    assert_eq!(code.total_message_len(), 0);
    let sys = register_system(&code).unwrap();
    for rep in check_bound_chains(&sys, code.spec()).unwrap() {
        assert!(rep.pass, "{}", rep.render_line());
    }
}

#[test]
fn qq_induction_final_step_matches_exchange_setup() {
    let sys = sys_src_4331();
    for (m, i, i_prime, j) in admissible_tuples(3) {
        let part = build_tau(3, m, i, i_prime, j).unwrap();
        let rep = check_qq_induction(&sys, 3, m, i, i_prime, j, part.s).unwrap();
        assert!(rep.pass, "{}", rep.render_line());
    }
}

#[test]
fn qq_induction_all_steps_small() {
    let sys = sys_src_3221();
    for (m, i, i_prime, j) in admissible_tuples(2) {
        let part = build_tau(2, m, i, i_prime, j).unwrap();
        for p in 1..=part.s {
            let rep = check_qq_induction(&sys, 2, m, i, i_prime, j, p).unwrap();
            assert!(rep.pass, "{}", rep.render_line());
        }
    }
}

#[test]
fn qq_induction_rejects_bad_step() {
    let sys = sys_src_4331();
    let part = build_tau(3, 1, 0, 0, 1).unwrap();
    assert!(check_qq_induction(&sys, 3, 1, 0, 0, 1, part.s + 1).is_err());
    assert!(check_qq_induction(&sys, 3, 1, 0, 0, 1, 0).is_err());
}

#[test]
fn final_bounds_zero_slack_at_corner() {
    // Secure single-level code: both bound evaluations land exactly on the
    // corner.
    let code = RegenCode::build_src(4, 3, 3, 1, 1).unwrap();
    let sys = register_system(&code).unwrap();
    let reps = check_final_bounds(&sys, &code).unwrap();
    assert_eq!(reps.len(), 2);
    for rep in &reps {
        assert!(rep.pass && rep.slack.is_zero(), "{}", rep.render_line());
    }
    assert!(reps[0].tag.contains("b5") && reps[1].tag.contains("b6"));

    // Plain code: evaluated against the unkeyed bound pair.
    let code = RegenCode::build_pm_mbr(4, 3, 3, 1).unwrap();
    let sys = register_system(&code).unwrap();
    let reps = check_final_bounds(&sys, &code).unwrap();
    for rep in &reps {
        assert!(rep.pass && rep.slack.is_zero(), "{}", rep.render_line());
    }
    assert!(reps[0].tag.contains("b1") && reps[1].tag.contains("b2"));
}

#[test]
fn suite_passes_on_presets() {
    let code = RegenCode::build_src(3, 2, 2, 1, 1).unwrap();
    let report = run_suite(code.spec(), 7).unwrap();
    assert!(report.all_pass, "{}", report.render_text());
    assert!(report.secrecy_index.is_zero());

    let code = RegenCode::build_pm_mbr(4, 3, 3, 1).unwrap();
    let report = run_suite(code.spec(), 7).unwrap();
    assert!(report.all_pass, "{}", report.render_text());
}

#[test]
fn suite_deterministic() {
    let code = RegenCode::build_src(3, 2, 2, 1, 1).unwrap();
    let a = run_suite(code.spec(), 42).unwrap();
    let b = run_suite(code.spec(), 42).unwrap();
    assert_eq!(a.render_text(), b.render_text());
    assert_eq!(a.to_json().to_string(), b.to_json().to_string());
}

#[test]
fn suite_refuses_extra_nodes() {
    let code = RegenCode::build_pm_mbr(5, 3, 3, 1).unwrap();
    assert!(run_suite(code.spec(), 0).is_err());
}
