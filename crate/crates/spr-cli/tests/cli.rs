//! End-to-end tests of the command-line interface: worked examples, JSON
//! schemas, exit codes, and the environment cap override.

use assert_cmd::Command;
use predicates::prelude::*;

fn spr() -> Command {
    Command::cargo_bin("spr").unwrap()
}

#[test]
fn insert_shifted_prints_both_tableaux() {
    spr()
        .args(["insert", "--shifted", "612543"])
        .assert()
        .success()
        .stdout(predicate::str::contains("1 2 3 6\n  4 5"))
        .stdout(predicate::str::contains("1  2' 4  6'\n   3  5'"));
}

#[test]
fn insert_json_has_primed_cells() {
    spr()
        .args(["insert", "--shifted", "612543", "--json"])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"shape\":[4,2]"))
        .stdout(predicate::str::contains("\"p\":true"));
}

#[test]
fn classical_insertion_differs() {
    spr()
        .args(["insert", "--classical", "612543"])
        .assert()
        .success()
        .stdout(predicate::str::contains("1 2 3"));
}

#[test]
fn class_lists_fiber_members() {
    // the fiber of 3124 under the shifted moves has eight members
    spr()
        .args(["class", "3124"])
        .assert()
        .success()
        .stdout(predicate::str::contains("class (8 members):"))
        .stdout(predicate::str::contains("3124"));
}

#[test]
fn expand_named_bases() {
    spr()
        .args(["expand", "schur-p", "2,1", "--basis", "f"])
        .assert()
        .success()
        .stdout(predicate::str::contains("F(1,2) + F(2,1)"));
    // the camel-case spelling is accepted as an alias
    spr()
        .args(["expand", "schurP", "2,1", "--basis", "f"])
        .assert()
        .success()
        .stdout(predicate::str::contains("F(1,2) + F(2,1)"));
    spr()
        .args(["expand", "schur-q", "2,1", "--basis", "k", "--json"])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"basis\":\"peak\""))
        .stdout(predicate::str::contains("\"degree\":3"));
    // P-functions have fractional peak-function coordinates: exit 1
    spr()
        .args(["expand", "schur-p", "3,2", "--basis", "k"])
        .assert()
        .code(1)
        .stderr(predicate::str::contains("non-integer"));
}

#[test]
fn lr_rules() {
    spr()
        .args(["lr", "2", "1", "--shifted"])
        .assert()
        .success()
        .stdout(predicate::str::contains("(2,1) + (3)"));
    spr()
        .args(["lr", "2,1", "1,1"])
        .assert()
        .success()
        .stdout(predicate::str::contains("(2,2,1)"));
}

#[test]
fn pairing_is_delta_on_matching_bases() {
    spr().args(["pairing", "2,1", "2,1"]).assert().success().stdout("1\n");
    spr().args(["pairing", "2,1", "1,2"]).assert().success().stdout("0\n");
}

#[test]
fn hopf_product_and_coproduct() {
    spr()
        .args(["hopf", "mul", "--algebra", "mr", "12", "21"])
        .assert()
        .success()
        .stdout(predicate::str::contains("1243"));
    spr()
        .args(["hopf", "comul", "--algebra", "mr", "231", "--json"])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"basis\":\"perm-pair\""));
    spr()
        .args(["hopf", "mul", "--algebra", "spr-prime", "1", "1"])
        .assert()
        .success()
        .stdout(predicate::str::contains("1 2"));
}

#[test]
fn render_pretty_prints_with_apostrophes() {
    let tableau = r#"{"shape":[4,2,1],"rows":[[{"v":1},{"v":2,"p":true},{"v":4},{"v":6,"p":true}],[{"v":3},{"v":5,"p":true}],[{"v":7}]]}"#;
    spr()
        .args(["render", "--tableau", tableau])
        .assert()
        .success()
        .stdout(predicate::str::contains("2'"))
        .stdout(predicate::str::contains("5'"));
    // declared shape inconsistent with the rows: usage error
    let bad = r#"{"shape":[3,2],"rows":[[{"v":1}],[{"v":2}]]}"#;
    spr().args(["render", "--tableau", bad]).assert().code(2);
}

#[test]
fn verify_runs_suites_and_reports() {
    spr()
        .args(["verify", "lemma-des", "sw-bijection", "--cap", "4"])
        .assert()
        .success()
        .stdout(predicate::str::contains("suite lemma-des: pass"))
        .stdout(predicate::str::contains("suite sw-bijection: pass"));
    spr()
        .args(["verify", "lemma-des", "--cap", "3", "--json"])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"suite\":\"lemma-des\""))
        .stdout(predicate::str::contains("\"checks\":"))
        .stdout(predicate::str::contains("\"elapsed_ms\":"));
    spr().args(["verify", "no-such-suite"]).assert().code(2);
}

#[test]
fn verify_all_at_reduced_cap() {
    spr()
        .args(["verify", "all", "--cap", "4"])
        .assert()
        .success()
        .stdout(predicate::str::contains("suite examples: pass"));
}

#[test]
fn env_var_overrides_default_cap() {
    // an unusable cap from the environment is reported as a usage error
    spr()
        .env("SPR_DEGREE_CAP", "not-a-number")
        .args(["verify", "lemma-des"])
        .assert()
        .code(2);
    spr()
        .env("SPR_DEGREE_CAP", "3")
        .args(["verify", "sw-bijection"])
        .assert()
        .success();
}

#[test]
fn usage_errors_exit_two() {
    spr().args(["insert", "--shifted", "6125"]).assert().code(2);
    spr().args(["no-such-command"]).assert().code(2);
    spr().assert().code(2);
}
