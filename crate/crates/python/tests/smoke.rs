//! Runs python/smoke_test.py against the bindings in an embedded interpreter.

use std::ffi::CString;

use pyo3::prelude::*;
use pyo3::types::PyModule;

#[test]
fn python_smoke_script() {
    let script = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../python/smoke_test.py")).unwrap();
    Python::initialize();
    Python::attach(|py| {
        let m = PyModule::new(py, "inideal").unwrap();
        inideal_py::register(&m).unwrap();
        py.import("sys").unwrap().getattr("modules").unwrap().set_item("inideal", m).unwrap();
        let code = CString::new(script.replace("if __name__ == \"__main__\":", "if True:")).unwrap();
        py.run(&code, None, None).unwrap_or_else(|e| panic!("{e}"));
    });
}
