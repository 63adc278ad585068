//! Compiles a small C program against the generated header and the static
//! library, then runs it.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "bernstir.h"

int main(void) {
    BernstirContext *ctx = bernstir_context_new();
    char *s = NULL;
    if (bernstir_stirling(ctx, BERNSTIR_STIRLING_SECOND, 4, 3, 2, &s) != BERNSTIR_STATUS_OK) return 10;
    if (strcmp(s, "5") != 0) return 11;
    bernstir_string_free(s);

    BernstirRational *alpha = NULL, *value = NULL;
    if (bernstir_rational_parse(ctx, "-1", &alpha) != BERNSTIR_STATUS_OK) return 12;
    if (bernstir_bernoulli_with(ctx, BERNSTIR_FAMILY_SECOND, 1, alpha, -1, 1, 0, &value) != BERNSTIR_STATUS_POLE) return 13;
    if (bernstir_last_error(ctx) == NULL) return 14;
    if (bernstir_bernoulli(ctx, BERNSTIR_FAMILY_FIRST, 1, alpha, 0, &value) != BERNSTIR_STATUS_OK) return 15;
    s = bernstir_rational_to_string(value);
    printf("%s\n", s);
    bernstir_string_free(s);
    bernstir_rational_free(value);
    bernstir_rational_free(alpha);
    bernstir_context_free(ctx);
    return 0;
}
"#;

fn target_dir() -> PathBuf {
    // tests run from target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_and_runs() {
    let lib_dir = target_dir();
    assert!(
        lib_dir.join("libbernstir_ffi.a").exists(),
        "static library missing from {}",
        lib_dir.display()
    );
    let work = std::env::temp_dir().join(format!("bernstir-c-smoke-{}", std::process::id()));
    std::fs::create_dir_all(&work).unwrap();
    let src = work.join("smoke.c");
    let exe = work.join("smoke");
    std::fs::write(&src, PROGRAM).unwrap();

    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = Command::new(std::env::var("CC").unwrap_or_else(|_| "cc".into()))
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(lib_dir.join("libbernstir_ffi.a"))
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler");
    assert!(status.success(), "C compilation failed");

    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "smoke program exited with {:?}", out.status);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1/2\n");
    std::fs::remove_dir_all(&work).ok();
}
