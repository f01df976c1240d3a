#include "affmult/verify.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "affmult/crystal.hpp"
#include "affmult/partition.hpp"
#include "affmult/paths.hpp"
#include "affmult/rsk.hpp"
#include "affmult/tableau.hpp"

namespace affmult {
namespace {

std::string word_str(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

bool agreement_sweep(const VerifyOptions& opts, const MethodTable& table, std::ostream& out) {
  int checked = 0;
  for (int ell = 1; ell <= opts.max_ell; ++ell)
    for (int a = 1; a <= ell; ++a)
      for (int b = 1; b <= ell; ++b)
        for (int k = a + b; k <= opts.max_k; ++k) {
          std::vector<std::string> methods = {"formula", "permutations"};
          if (ell <= 6 && k <= 5) methods.insert(methods.end(), {"paths", "crystal"});
          MultiplicityReport report = cross_check({k, a, b, ell, std::nullopt}, methods, table);
          ++checked;
          if (!report.agree) {
            out << "FAIL agreement: k=" << k << " a=" << a << " b=" << b << " ell=" << ell;
            for (const auto& [name, value] : report.values) out << " " << name << "=" << value;
            out << "\n";
            return false;
          }
        }
  out << "PASS agreement sweep (" << checked << " queries)\n";
  return true;
}

bool rsk_round_trip(const VerifyOptions& opts, std::ostream& out) {
  int checked = 0;
  for (int ell = 1; ell <= std::min(opts.max_ell, 6); ++ell) {
    Word w(ell);
    std::iota(w.begin(), w.end(), 1);
    do {
      auto [m, n] = rsk_forward(w);
      if (m.shape() != n.shape()) {
        out << "FAIL rsk shapes differ for " << word_str(w) << "\n";
        return false;
      }
      if (m.shape().length() != lds_length(w)) {
        out << "FAIL rsk row count is not the longest decreasing run for " << word_str(w) << "\n";
        return false;
      }
      if (rsk_inverse(m, n) != w) {
        out << "FAIL rsk round trip for " << word_str(w) << "\n";
        return false;
      }
      ++checked;
    } while (std::next_permutation(w.begin(), w.end()));
  }
  out << "PASS rsk round trip (" << checked << " words)\n";
  return true;
}

bool path_tableau_round_trip(const VerifyOptions& opts, std::ostream& out) {
  int checked = 0;
  for (int m = 1; m <= opts.max_ell; ++m) {
    Region region = build_region(m + 1, 1, 1);
    for (const auto& shape : gen_partitions(m, 1, m)) {
      int k = shape.length() + 1;
      for (const auto& x : enumerate_syt(shape))
        for (PathKind kind : {PathKind::lower, PathKind::upper}) {
          PathSequence seq = f_map(x, k, region, kind);
          if (!is_admissible(seq, region, k) || sequence_type(seq, region) != shape ||
              g_map(seq) != x) {
            out << "FAIL path/tableau round trip at shape " << shape.to_string() << "\n";
            return false;
          }
          ++checked;
        }
    }
  }
  out << "PASS path/tableau round trip (" << checked << " tableaux)\n";
  return true;
}

bool strip_round_trip(const VerifyOptions& opts, std::ostream& out) {
  int checked = 0;
  for (int n = 1; n <= opts.max_ell; ++n)
    for (const auto& mu : gen_partitions(n, 1, n))
      for (int a = 1; a <= std::min(3, mu.length()); ++a)
        for (const auto& m : enumerate_anchored_syt(mu, a)) {
          auto [shape, v] = strip_rectify(m, a);
          const auto dec = decrement_set(mu, a);
          if (shape != v.shape() || std::find(dec.begin(), dec.end(), shape) == dec.end() ||
              unstrip(v, mu, a) != m) {
            out << "FAIL strip/unstrip round trip at mu=" << mu.to_string() << " a=" << a << "\n";
            return false;
          }
          ++checked;
        }
  out << "PASS strip/unstrip round trip (" << checked << " tableaux)\n";
  return true;
}

bool crystal_path_round_trip(const VerifyOptions& opts, std::ostream& out) {
  int checked = 0;
  for (int ell = 1; ell <= std::min(opts.max_ell, 5); ++ell)
    for (int a = 1; a <= ell; ++a)
      for (int b = 1; b <= ell; ++b)
        for (int k = a + b; k <= std::min(opts.max_k, 4); ++k) {
          Region region = build_region(ell, a, b);
          int n = n_min(ell, a, b);
          for (const auto& mu : gen_partitions(ell, std::max(a, b), k))
            for (const auto& pair : enumerate_pairs(region, k, mu)) {
              CrystalTuple t = paths_to_crystal(pair, mu, region, k, n);
              auto [back, mu2] = crystal_to_paths(t, region, k);
              if (mu2 != mu || back.lower.moves != pair.lower.moves ||
                  back.upper.moves != pair.upper.moves) {
                out << "FAIL paths -> crystal -> paths at k=" << k << " a=" << a << " b=" << b
                    << " ell=" << ell << " mu=" << mu.to_string() << "\n";
                return false;
              }
              ++checked;
            }
          for (const auto& t : enumerate_weight_space(n, k, ell, a, b)) {
            auto [pair, mu] = crystal_to_paths(t, region, k);
            if (!(paths_to_crystal(pair, mu, region, k, n) == t)) {
              out << "FAIL crystal -> paths -> crystal at k=" << k << " a=" << a << " b=" << b
                  << " ell=" << ell << "\n";
              return false;
            }
            ++checked;
          }
        }
  out << "PASS crystal/path round trip (" << checked << " objects)\n";
  return true;
}

}  // namespace

bool run_verification(const VerifyOptions& opts, std::ostream& out) {
  return run_verification(opts, out, default_methods());
}

bool run_verification(const VerifyOptions& opts, std::ostream& out, const MethodTable& table) {
  bool ok = agreement_sweep(opts, table, out);
  ok = rsk_round_trip(opts, out) && ok;
  ok = path_tableau_round_trip(opts, out) && ok;
  ok = strip_round_trip(opts, out) && ok;
  ok = crystal_path_round_trip(opts, out) && ok;
  out << (ok ? "VERIFICATION PASSED\n" : "VERIFICATION FAILED\n");
  return ok;
}

}  // namespace affmult
