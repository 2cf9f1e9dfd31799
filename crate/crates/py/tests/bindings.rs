use pyo3::conversion::FromPyObjectOwned;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn with_module<R>(f: impl FnOnce(Python<'_>, &Bound<'_, PyDict>) -> R) -> R {
    Python::initialize();
    Python::attach(|py| {
        let module = pyo3::wrap_pymodule!(hardbench::hardbench)(py);
        let globals = PyDict::new(py);
        globals.set_item("hb", module).unwrap();
        f(py, &globals)
    })
}

fn eval_py<'py, T: FromPyObjectOwned<'py>>(
    py: Python<'py>,
    g: &Bound<'py, PyDict>,
    expr: &str,
) -> T {
    let code = std::ffi::CString::new(expr).unwrap();
    let value = py.eval(&code, Some(g), None).unwrap();
    let extracted: PyResult<T> = value.extract().map_err(Into::into);
    extracted.unwrap_or_else(|e| panic!("cannot extract result of `{expr}`: {e}"))
}

#[test]
fn module_exposes_catalog_and_evaluation() {
    with_module(|py, g| {
        let n: usize = eval_py(py, g, "len(hb.list_functions())");
        assert_eq!(n, 21);
        let v: f64 = eval_py(py, g, "hb.evaluate('layeb12', [2.0, 2.0])");
        assert_eq!(v, -3.718281828459045);
        let deg: f64 = eval_py(
            py,
            g,
            "hb.evaluate('crosslegtable', [3.141592653589793] * 2, mode='degrees')",
        );
        assert_eq!(deg, -1.0);
        let c: String = eval_py(py, g, "hb.describe('layeb16').consistency");
        assert_eq!(c, "ambiguous");
    });
}

#[test]
fn errors_become_value_errors() {
    with_module(|py, g| {
        let code = std::ffi::CString::new("hb.evaluate('layeb01', [1.0])").unwrap();
        let err = py.eval(&code, Some(g), None).unwrap_err();
        assert!(err.is_instance_of::<pyo3::exceptions::PyValueError>(py));
    });
}

#[test]
fn minimize_respects_budget() {
    with_module(|py, g| {
        let used: usize = eval_py(
            py,
            g,
            "hb.minimize('layeb02', 3, max_fes=777, seed=1).evaluations_used",
        );
        assert!(used <= 777);
        let chi2: f64 = eval_py(
            py,
            g,
            "hb.friedman([[1, 2, 3], [1, 3, 2], [2, 1, 3], [1, 2, 3]])[2]",
        );
        assert_eq!(chi2, 4.5);
    });
}
