// Command-line front end: reads a job (or a list of jobs with --batch) and
// prints the invariant report as a table or as JSON.

#include "fiberprod/pipeline.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

namespace {

std::string read_input(const std::string& path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in)
        fiberprod::fail(fiberprod::ErrorKind::InvalidArgument, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void print_error(const fiberprod::JobResult& r)
{
    std::cerr << "error (" << fiberprod::to_string(*r.error) << "): " << r.message << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Invariants of fiber products of rational elliptic surfaces"};
    std::string command;
    std::string path;
    bool as_json = false;
    bool batch = false;
    fiberprod::CommandLineOverrides overrides;
    int branch_components = 0;

    app.add_option("command", command, "surface | product | deform | kummer")
        ->required()
        ->check(CLI::IsMember({"surface", "product", "deform", "kummer"}));
    app.add_option("input", path, "job file, or - for standard input")->required();
    app.add_flag("--json", as_json, "print the machine-readable report");
    app.add_flag("--batch", batch, "input is a JSON array of jobs");
    app.add_flag("--minimalize", overrides.minimalize, "reduce non-minimal Weierstrass models");
    app.add_flag("--allow-nonprojective", overrides.allow_nonprojective,
                 "report invariants of non-projective small resolutions");
    app.add_option("--branch-components", branch_components, "components of the Kummer branch curve")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : fiberprod::exit_code(fiberprod::ErrorKind::InvalidArgument);
    }
    if (branch_components > 0)
        overrides.branch_components = branch_components;

    try {
        const auto cmd = fiberprod::parse_command(command);
        const auto doc = fiberprod::parse_json_text(read_input(path));

        if (!batch) {
            const auto result = fiberprod::run_job_document(cmd, doc, overrides);
            if (as_json)
                std::cout << fiberprod::result_to_json(result).dump(2) << '\n';
            else if (result.report)
                fiberprod::render_text(std::cout, *result.report);
            if (result.error)
                print_error(result);
            return result.exit_code();
        }

        const auto results = fiberprod::run_batch(cmd, doc, overrides);
        int code = 0;
        if (as_json) {
            auto out = fiberprod::json::array();
            for (const auto& r : results)
                out.push_back(fiberprod::result_to_json(r));
            std::cout << out.dump(2) << '\n';
        }
        for (std::size_t k = 0; k < results.size(); ++k) {
            const auto& r = results[k];
            if (!as_json) {
                std::cout << "== job " << k << " ==\n";
                if (r.report)
                    fiberprod::render_text(std::cout, *r.report);
                else
                    std::cout << "error (" << fiberprod::to_string(*r.error) << "): " << r.message << "\n";
                std::cout << '\n';
            }
            else if (r.error) {
                std::cerr << "job " << k << ": ";
                print_error(r);
            }
            if (code == 0)
                code = r.exit_code();
        }
        return code;
    }
    catch (const fiberprod::Error& e) {
        std::cerr << "error (" << fiberprod::to_string(e.kind()) << "): " << e.what() << '\n';
        return fiberprod::exit_code(e.kind());
    }
}
