#include "rmg/fixtures.hpp"

namespace rmg {

namespace {

std::map<std::string, Magma> make_fixtures() {
  std::map<std::string, Magma> f;

  f.emplace("W", Magma(4,
                       {
                           0, 2, 3, 1,  //
                           3, 1, 0, 2,  //
                           1, 3, 2, 0,  //
                           2, 0, 1, 3,  //
                       },
                       std::vector<std::string>{"1", "2", "3", "4"}));

  f.emplace("C", Magma(2,
                       {
                           0, 1,  //
                           1, 1,  //
                       },
                       std::vector<std::string>{"a", "b"}));

  f.emplace("C1", Magma(3,
                        {
                            0, 1, 0,  //
                            1, 1, 1,  //
                            0, 1, 2,  //
                        },
                        std::vector<std::string>{"a", "b", "1"}));

  f.emplace("EX2_PRINTED", Magma(4,
                                 {
                                     0, 1, 0, 1,  //
                                     1, 1, 1, 1,  //
                                     0, 1, 2, 2,  //
                                     1, 1, 2, 2,  //
                                 },
                                 std::vector<std::string>{"a", "b", "1", "x"}));

  // Same table with cell (a, x) = a; a test asserts this equals
  // build_extension(C1, ex2_defining_maps()).
  f.emplace("EX2_DERIVED", Magma(4,
                                 {
                                     0, 1, 0, 0,  //
                                     1, 1, 1, 1,  //
                                     0, 1, 2, 2,  //
                                     1, 1, 2, 2,  //
                                 },
                                 std::vector<std::string>{"a", "b", "1", "x"}));

  return f;
}

}  // namespace

const std::map<std::string, Magma>& bundled_fixtures() {
  static const std::map<std::string, Magma> fixtures = make_fixtures();
  return fixtures;
}

const Magma& fixture(const std::string& name) {
  const auto& f = bundled_fixtures();
  auto it = f.find(name);
  if (it == f.end()) throw ArgumentError("unknown fixture '" + name + "'");
  return it->second;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, m] : bundled_fixtures()) names.push_back(name);
  return names;
}

const Ex2Maps& ex2_defining_maps() {
  static const Ex2Maps maps{2, {1, 1, 2}, {0, 1, 2}};
  return maps;
}

}  // namespace rmg
