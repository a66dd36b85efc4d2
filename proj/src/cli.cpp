#include "hyperdet/cli.hpp"

#include "hyperdet/errors.hpp"
#include "hyperdet/hyperdet.hpp"
#include "hyperdet/io.hpp"
#include "hyperdet/partial.hpp"
#include "hyperdet/smallformat.hpp"
#include "hyperdet/symalg.hpp"

#include <CLI11.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hdet {

namespace {

std::string vector_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + ")";
}

MultiMatrix load(const std::string& path, const std::vector<std::size_t>& ordering) {
  MultiMatrix a = read_tensor_file(path);
  if (!ordering.empty()) a = reorder_inner_axes(a, ordering);
  return a;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact hyperdeterminants of boundary-format multidimensional matrices"};
  app.require_subcommand(1);

  std::string file, file_b, output;
  std::vector<std::size_t> ordering, dims;
  std::optional<std::size_t> axis_r;
  std::size_t axis_s = 0;
  std::string kernel_name = "bareiss";

  const std::map<std::string, DetKernel> kernels{{"bareiss", DetKernel::bareiss},
                                                 {"crt", DetKernel::modular_crt}};
  auto add_ordering = [&](CLI::App* cmd) {
    cmd->add_option("--ordering", ordering, "Inner axes in slot order, e.g. 2,1")->delimiter(',');
  };

  auto* det = app.add_subcommand("det", "Print Det(A) and its degree N");
  det->add_option("file", file, "Tensor JSON document")->required();
  det->add_option("--kernel", kernel_name, "bareiss or crt")
      ->check(CLI::IsMember({"bareiss", "crt"}));
  add_ordering(det);

  auto* check = app.add_subcommand("check", "Print nondegenerate or degenerate");
  check->add_option("file", file, "Tensor JSON document")->required();
  add_ordering(check);

  auto* conv = app.add_subcommand("convolve", "Write A *_{r,s} B as a tensor document");
  conv->add_option("a", file, "Tensor A")->required();
  conv->add_option("b", file_b, "Tensor B")->required();
  conv->add_option("-r", axis_r, "Axis of A (default: last)");
  conv->add_option("-s", axis_s, "Axis of B (default: 0)");
  conv->add_option("-o,--output", output, "Output file (default: stdout)");

  auto* binet = app.add_subcommand("verify-binet", "Check Det(A*B) = Det(A)^e1 Det(B)^e2");
  binet->add_option("a", file, "Tensor A")->required();
  binet->add_option("b", file_b, "Tensor B")->required();
  binet->add_option("--kernel", kernel_name, "bareiss or crt")
      ->check(CLI::IsMember({"bareiss", "crt"}));

  auto* dump = app.add_subcommand("dump-partial", "List the partial map with labeled bases");
  dump->add_option("file", file, "Tensor JSON document")->required();
  add_ordering(dump);

  auto* degree = app.add_subcommand("degree", "Print the degree N of a boundary format");
  degree->add_option("file", file, "Tensor JSON document");
  degree->add_option("--dims", dims, "Format, e.g. 3,2,2")->delimiter(',');

  auto* counter = app.add_subcommand("counterexample", "Reproduce the 2x2x2 non-boundary counterexample");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_parse;
  }

  try {
    const DetKernel kernel = kernels.at(kernel_name);
    if (det->parsed()) {
      const MultiMatrix a = load(file, ordering);
      out << to_string(hyperdet(a, kernel)) << '\n' << "N=" << degree_N(a.format()) << '\n';
    } else if (check->parsed()) {
      out << (is_nondegenerate(load(file, ordering)) ? "nondegenerate" : "degenerate") << '\n';
    } else if (conv->parsed()) {
      const MultiMatrix a = read_tensor_file(file);
      const MultiMatrix b = read_tensor_file(file_b);
      const MultiMatrix c = convolve(a, b, axis_r.value_or(a.format().order()), axis_s);
      if (output.empty()) {
        out << to_tensor_json(c);
      } else {
        write_tensor_file(output, c);
      }
    } else if (binet->parsed()) {
      const BinetReport r = verify_binet(read_tensor_file(file), read_tensor_file(file_b), kernel);
      out << "exponents " << r.exponents.exp_a.get_str() << ' ' << r.exponents.exp_b.get_str() << '\n'
          << "det_a " << to_string(r.det_a) << '\n'
          << "det_b " << to_string(r.det_b) << '\n'
          << "lhs " << to_string(r.lhs) << '\n'
          << "rhs " << to_string(r.rhs) << '\n'
          << (r.equal ? "PASS" : "FAIL") << '\n';
      return r.equal ? exit_ok : exit_failure;
    } else if (dump->parsed()) {
      out << dump_partial(build_partial(load(file, ordering)));
    } else if (degree->parsed()) {
      if (file.empty() == dims.empty()) {
        err << "degree: give either a tensor file or --dims\n";
        return exit_parse;
      }
      const Format f = file.empty() ? Format(dims) : read_tensor_file(file).format();
      out << degree_N(f) << '\n';
    } else if (counter->parsed()) {
      const CounterexampleReport r = counterexample_report();
      out << "det_a " << to_string(r.det_a) << (r.a_nondegenerate ? " nondegenerate" : " degenerate") << '\n'
          << "det_b " << to_string(r.det_b) << (r.b_nondegenerate ? " nondegenerate" : " degenerate") << '\n'
          << "product " << r.product.format().to_string() << '\n'
          << "witness";
      for (const auto& v : r.witness) out << ' ' << vector_string(v);
      out << '\n' << "witness_valid " << (r.witness_valid ? "true" : "false") << '\n';
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_parse;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return exit_not_boundary;
  } catch (const ShapeError& e) {
    err << "shape error: " << e.what() << '\n';
    return exit_shape;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_ok;
}

}  // namespace hdet
