#include "pmv/workbench.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"pmv - exact workbench for pseudo MV-algebras and Riesz-space-valued states"};
    app.require_subcommand(1);

    std::string job_path, out_path, csv_dir;

    CLI::App* run = app.add_subcommand("run", "run the analyses of a job file");
    run->add_option("--job", job_path, "job JSON file")->required();
    run->add_option("--out", out_path, "report JSON output path (default: stdout)");
    run->add_option("--csv", csv_dir, "directory for CSV tables");

    CLI::App* validate = app.add_subcommand("validate", "schema and axiom precheck of a job file");
    validate->add_option("--job", job_path, "job JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    std::string message;
    int code = 0;
    if (app.got_subcommand(run)) {
        code = pmv::workbench::run_files(job_path, out_path, csv_dir, message);
        if (code == 0 || code == 2) {
            if (!message.empty()) std::cout << message;  // report when no --out given
            if (code == 2) std::cerr << "property-check failures recorded in the report\n";
        } else {
            std::cerr << "error: " << message << "\n";
        }
    } else {
        code = pmv::workbench::validate_file(job_path, message);
        (code == 0 ? std::cout : std::cerr) << message << (message.back() == '\n' ? "" : "\n");
    }
    return code;
}
