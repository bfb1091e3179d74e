//! Home of the `acceptance` test target, which reproduces the worked example
//! and the standard-equation checks end to end and prints one PASS/FAIL line
//! per criterion. Run it with `cargo test -p lode-validation --test acceptance`.
