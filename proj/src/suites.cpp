#include "qaw/suites.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <tuple>

#include "qaw/qjacobi.hpp"
#include "qaw/tridiag.hpp"
#include "qaw/uqsl2.hpp"

namespace qaw {

namespace {

constexpr std::array kSuiteNames{"all", "uqsl2", "aw", "equitable", "little", "big", "tridiag"};
constexpr std::array kLeafSuites{Suite::uqsl2, Suite::aw, Suite::equitable, Suite::little, Suite::big,
                                 Suite::tridiag};

Reports run_leaf(Suite suite, std::int64_t seed, const SuiteOptions& options) {
  Reports out;
  switch (suite) {
    case Suite::uqsl2:
      return verify_chevalley(sample_point(seed, Profile::general, options.n_max));
    case Suite::aw: {
      const ParamPoint general = sample_point(seed, Profile::general, options.n_max);
      append(out, verify_g_table(general));
      append(out, verify_aw(general));
      append(out, verify_aw(sample_point(seed, Profile::little, options.n_max)));
      append(out, verify_aw(sample_point(seed, Profile::big, options.n_max)));
      return out;
    }
    case Suite::equitable:
      return verify_equitable_aw(sample_point(seed, Profile::equitable, options.n_max));
    case Suite::little:
      return verify_little(sample_point(seed, Profile::little, options.n_max), options.n_max);
    case Suite::big:
      return verify_big(sample_point(seed, Profile::big, options.n_max), options.n_max);
    case Suite::tridiag:
      return verify_tridiag(sample_point(seed, Profile::equitable, options.n_max),
                            sample_point(seed, Profile::little, options.n_max), options.perturb_sol1);
    case Suite::all:
      break;
  }
  throw std::logic_error("run_leaf called with the aggregate suite");
}

}  // namespace

std::string to_string(Suite suite) { return kSuiteNames.at(static_cast<std::size_t>(suite)); }

Suite parse_suite(const std::string& name) {
  const auto it = std::find(kSuiteNames.begin(), kSuiteNames.end(), name);
  if (it == kSuiteNames.end()) throw std::invalid_argument("unknown suite: " + name);
  return static_cast<Suite>(it - kSuiteNames.begin());
}

Reports run_suite(Suite suite, const std::vector<std::int64_t>& seeds, const SuiteOptions& options) {
  Reports out;
  for (const Suite leaf : kLeafSuites) {
    if (suite != Suite::all && suite != leaf) continue;
    Reports block;
    for (const std::int64_t seed : seeds) append(block, run_leaf(leaf, seed, options));
    std::stable_sort(block.begin(), block.end(), [](const VerificationReport& x, const VerificationReport& y) {
      return std::tie(x.check_name, x.seed) < std::tie(y.check_name, y.seed);
    });
    append(out, std::move(block));
  }
  return out;
}

}  // namespace qaw
