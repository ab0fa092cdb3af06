//! Holds the `acceptance` test target. It lives in its own package so that
//! it runs after the unit and integration tests of the other crates.
