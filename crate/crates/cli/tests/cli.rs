use std::process::{Command, Output};

fn run_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_bicomlab"));
    cmd.args(args).env_remove("BICOMLAB_DEGREE_BOUND");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let Output { status, stdout, stderr } = cmd.output().expect("binary runs");
    (
        status.code().expect("exit code"),
        String::from_utf8(stdout).unwrap(),
        String::from_utf8(stderr).unwrap(),
    )
}

fn run(args: &[&str]) -> (i32, String, String) {
    run_env(args, &[])
}

#[test]
fn normalize_prints_canonical_form() {
    assert_eq!(run(&["normalize", "x*y - y*x"]), (0, "Y[x|y] - Y[y|x]\n".into(), String::new()));
    let (code, out, _) = run(&["normalize", "1/2*{{x,y},z}"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1/2*Y[x|y,z] + 1/2*Y[y|x,z] + 1/2*Y[x,z|y] + 1/2*Y[y,z|x]\n");
    let tortken = "{{a,b},{c,d}} - {{a,d},{c,b}} + {assoc(a,b,c),d} - {assoc(a,d,c),b}";
    assert_eq!(run(&["normalize", tortken]).1, "0\n");
}

#[test]
fn normalize_output_reparses() {
    let (_, out, _) = run(&["normalize", "[[x,y],z] + 3*{x,y*z}"]);
    let (code, again, _) = run(&["normalize", out.trim()]);
    assert_eq!(code, 0);
    assert_eq!(again, out);
}

#[test]
fn involute_swaps_column_and_row() {
    assert_eq!(run(&["involute", "x*y"]).1, "Y[y|x]\n");
}

#[test]
fn criteria_exit_codes() {
    assert_eq!(run(&["is-jordan", "x*y + y*x"]), (0, "true\n".into(), String::new()));
    assert_eq!(run(&["is-jordan", "x*y"]).0, 1);
    assert_eq!(run(&["is-lie", "x*y - y*x"]).1, "true\n");
    assert_eq!(run(&["is-lie", "x*y + y*x"]), (1, "false\n".into(), String::new()));
}

#[test]
fn express_commands() {
    assert_eq!(run(&["lie-express", "x*y - y*x"]), (0, "[x,y]\n".into(), String::new()));
    assert_eq!(run(&["jordan-express", "x*y + y*x"]), (0, "{x,y}\n".into(), String::new()));
    assert_eq!(run(&["lie-express", "x*y"]).0, 1);
    assert_eq!(run(&["jordan-express", "x*y - y*x"]).0, 1);
}

#[test]
fn check_identity() {
    assert_eq!(run(&["check-identity", "--product", "com", "[a,b] = -[b,a]"]).0, 0);
    assert_eq!(run(&["check-identity", "--product", "plain", "a*(b*c) = b*(a*c)"]).0, 0);
    assert_eq!(run(&["check-identity", "--product", "plain", "a*b = b*a"]).0, 1);
    let weak = "{{{a,b},c},d} = {{{a,b},d},c}";
    assert_eq!(run(&["check-identity", "--product", "anti", weak]).0, 0);
    assert_eq!(run(&["check-identity", "--product", "anti", "[a,b] = a*b"]).0, 2);
}

#[test]
fn check_finite_martin_a() {
    let weak = "{{{a,b},c},d} = {{{a,b},d},c}";
    let (code, out, _) = run(&["check-finite", "--algebra", "martin-A", weak]);
    assert_eq!(code, 1);
    assert_eq!(out, "fails at a=e1, b=e1, c=e1, d=e2: 1/4*e2\n");
    let (code, out, _) = run(&["--json", "check-finite", "--algebra", "martin-A", weak]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["holds"], false);
    assert_eq!(v["assignments"], 256);
    assert_eq!(v["witness"]["value"]["e2"], "1/4");
    assert_eq!(v["witness"]["assignment"]["d"], "e2");

    let tortken = "{{a,b},{c,d}} - {{a,d},{c,b}} = -{assoc(a,b,c),d} + {assoc(a,d,c),b}";
    assert_eq!(run(&["check-finite", "--algebra", "martin-A", tortken]).0, 0);
}

#[test]
fn check_finite_from_file() {
    let path = std::env::temp_dir().join(format!("bicomlab-field-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"dim":1,"basis":["e"],"products":[{"i":1,"j":1,"out":{"e":"1"}}]}"#).unwrap();
    let file = path.to_str().unwrap();
    assert_eq!(run(&["check-finite", "--algebra", file, "(a*b)*c = a*(b*c)"]).0, 0);
    assert_eq!(run(&["check-finite", "--algebra", file, "a*b = -b*a"]).0, 1);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(run(&["check-finite", "--algebra", file, "a*b = b*a"]).0, 2);
}

#[test]
fn basis_and_dimensions() {
    let (code, out, _) = run(&["basis", "--multidegree", "x:1,y:2"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 4);
    assert!(out.lines().all(|l| l.starts_with("Y[")));
    assert_eq!(run(&["dim", "--degree", "4", "--kind", "bicom"]).1, "14\n");
    assert_eq!(run(&["dim", "--degree", "4", "--kind", "jordan"]).1, "7\n");
    assert_eq!(run(&["dim", "--degree", "4", "--kind", "lie"]).1, "3\n");
}

#[test]
fn json_output() {
    let (_, out, _) = run(&["--json", "normalize", "x*y"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["terms"][0]["col"][0], "x");
    assert_eq!(v["terms"][0]["coeff"], "1");
    let (code, out, _) = run(&["--json", "verify", "--suite", "degree4"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.lines().next().unwrap()).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["dims"]["anti_system_rank"], 7);
}

#[test]
fn verify_respects_degree_bound() {
    let (code, out, _) = run_env(&["verify", "--suite", "theorem1"], &[("BICOMLAB_DEGREE_BOUND", "3")]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2);
    assert!(out.lines().all(|l| l.contains("PASS")));
    let (code, _, err) = run_env(&["verify", "--suite", "theorem2"], &[("BICOMLAB_DEGREE_BOUND", "9")]);
    assert_eq!(code, 2);
    assert!(err.contains("BICOMLAB_DEGREE_BOUND"));
    assert_eq!(run(&["verify", "--suite", "section7"]).0, 0);
    assert_eq!(run(&["verify", "--oracle", "--degree", "4"]).0, 0);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&[]).0, 2);
    let (code, _, err) = run(&["normalize", "x*("]);
    assert_eq!(code, 2);
    assert!(err.contains("1:4"));
    assert_eq!(run(&["normalize", "x = y"]).0, 2);
    assert_eq!(run(&["dim", "--degree", "4", "--kind", "weird"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}
