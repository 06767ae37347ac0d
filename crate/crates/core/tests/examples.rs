//! Every example must run to completion.

macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));
        }

        #[test]
        fn $name() {
            $name::run_example().unwrap();
        }
    };
}

example!(table_reproduction);
example!(strategies);
example!(decomposition);
example!(constants);
example!(error_scan);
example!(factorize);
example!(bench_scaling);
