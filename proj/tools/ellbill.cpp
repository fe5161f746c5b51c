// ellbill: solve, simulate, render and verify elliptic billiard trajectories.
//
//   ellbill solve    --input polygon.json  --output result.json
//   ellbill simulate --input launch.json   --output trajectory.json
//   ellbill render   --input result.json   --output figure.svg
//   ellbill verify   --input result.json

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "ellbill/cli/commands.hpp"

namespace {

bool read_all(const std::string& path, std::string& out) {
    if (path == "-") {
        out.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        return !std::cin.bad();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return !in.bad();
}

bool write_all(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return static_cast<bool>(std::cout);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << text;
    out.flush();
    return static_cast<bool>(out);
}

int io_failure(const std::string& message) {
    std::cerr << ellbill::cli::dump(ellbill::cli::error_document("IoError", message));
    return ellbill::cli::kExitIo;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unique billiard ellipses for triangles, parallelograms and Darboux butterflies"};
    app.require_subcommand(1);

    std::string input = "-", output = "-";
    ellbill::cli::Options opt;
    for (const auto& [name, help] :
         {std::pair{"solve", "find the ellipse in which a polygon is a periodic billiard trajectory"},
          std::pair{"simulate", "trace a billiard trajectory inside an ellipse"},
          std::pair{"render", "draw a solve result or trajectory as SVG"},
          std::pair{"verify", "re-check the certificates of a solve result or trajectory"}}) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--input", input, "input document path, - for stdin")->capture_default_str();
        sub->add_option("--output", output, "output path, - for stdout")->capture_default_str();
        sub->add_option("--tol", opt.tol, "residual tolerance")->capture_default_str()->check(CLI::PositiveNumber);
        sub->add_option("--max-bounces", opt.max_bounces, "upper bound on simulated bounces")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        sub->add_option("--digits", opt.digits, "significant digits of emitted numbers")
            ->capture_default_str()
            ->check(CLI::Range(1, 17));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : ellbill::cli::kExitParse;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    std::string text;
    if (!read_all(input, text)) return io_failure("cannot read " + input);
    const ellbill::cli::CommandResult r = ellbill::cli::run_command(command, text, opt);
    if (r.exit_code != ellbill::cli::kExitOk && r.exit_code != ellbill::cli::kExitSolver) {
        std::cerr << r.output;
        return r.exit_code;
    }
    if (r.exit_code == ellbill::cli::kExitSolver && command != "verify") {
        std::cerr << r.output;
        return r.exit_code;
    }
    if (!write_all(output, r.output)) return io_failure("cannot write " + output);
    return r.exit_code;
}
