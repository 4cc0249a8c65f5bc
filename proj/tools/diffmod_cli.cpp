#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "diffmod/jobs.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Local invariants of holonomic difference modules on the affine line"};
    std::string job_path;
    diffmod::JobOptions opts;
    int indent = 2;
    app.add_option("job", job_path, "job file (JSON); reads standard input when omitted");
    app.add_option("--order", opts.order, "series truncation order")->capture_default_str();
    app.add_option("--window", opts.window, "tau-exponent window")->capture_default_str();
    app.add_option("--json-indent", indent, "indentation of the JSON report; -1 for compact")
        ->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    std::string text;
    if (job_path.empty()) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(job_path);
        if (!in) {
            diffmod::Json err;
            err["error"] = "ParseError";
            err["detail"] = "cannot open job file: " + job_path;
            std::cout << err.dump(indent < 0 ? -1 : indent) << "\n";
            return 2;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }

    auto [report, code] = diffmod::run_job_text(text, opts, indent);
    std::cout << report << "\n";
    return code;
}
