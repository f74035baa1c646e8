#include <doctest.h>

#include <functional>
#include <string>

#include "corpus.hpp"
#include "pmw/error.hpp"
#include "pmw/io.hpp"

using namespace pmw;

namespace {

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("poset text format") {
  const Poset p = io::read_poset("# two components\nn=5\n1<2\n2<3\n\n4 < 5\n");
  CHECK(p == corpus::chain_plus_pair());
  CHECK(io::read_poset("n=3\n") == Poset::antichain(3));
  CHECK(message_of([] { io::read_poset("n=3\n1<4\n", "x.poset"); }).find("x.poset:2:") != std::string::npos);
  CHECK(message_of([] { io::read_poset("1<2\n"); }).find("relation before n=") != std::string::npos);
  CHECK(message_of([] { io::read_poset("n=2\nfoo\n"); }).find(":2:") != std::string::npos);
  CHECK(message_of([] { io::read_poset("# nothing\n"); }).find("missing n=") != std::string::npos);
  CHECK(message_of([] { io::read_poset("n=2\n1<2\n2<1\n"); }).find("CycleDetected") != std::string::npos);
}

TEST_CASE("code text format") {
  const auto g = io::read_code("q=3\nn=3\nk=2\n1 0 2\n0 1 1\n");
  CHECK(g.field().order() == 3);
  CHECK(g.rows() == std::vector<Vector>{{1, 0, 2}, {0, 1, 1}});
  const auto h = io::read_code("q=8\nmodulus=1 1 0 1\nn=2\nk=1\n7 5\n");
  CHECK(h.field().modulus() == std::vector<std::uint32_t>{1, 0, 1, 1});
  CHECK(message_of([] { io::read_code("q=3\nn=2\nk=1\n1 3\n", "c"); }).find("c:4:") != std::string::npos);
  CHECK(message_of([] { io::read_code("q=3\nn=2\nk=2\n1 1\n"); }).find("expected 2 rows") != std::string::npos);
  CHECK(message_of([] { io::read_code("q=3\nn=3\nk=1\n1 1\n"); }).find("expected 3") != std::string::npos);
  CHECK(message_of([] { io::read_code("q=4\nmodulus=1 0 1\nn=1\nk=0\n"); }).find("ReducibleModulus") !=
        std::string::npos);
  CHECK(message_of([] { io::read_code("q=6\nn=1\nk=0\n"); }).find("NonPrimeCharacteristic") != std::string::npos);
}

TEST_CASE("subgroup and partition text formats") {
  const auto group = io::read_subgroup("# swap\n2 1 4 3\n", 4);
  REQUIRE(group.size() == 2);
  CHECK(group[0].is_identity());
  CHECK(io::format_permutation(group[1]) == "2 1 4 3");
  CHECK(message_of([] { io::read_subgroup("1 1 2\n", 3); }).find("repeated") != std::string::npos);

  const Poset c = Poset::chain(2);
  const auto e = io::read_partition("{}\n{1} {1,2}\n", c);
  CHECK(e.num_blocks() == 2);
  CHECK(e.kind() == RelationKind::Custom);
  CHECK(io::format_ideal(e.representative(1)) == "{1}");
  CHECK_THROWS_AS(io::read_partition("{}\n{1}\n", c), Error);
  CHECK(message_of([] { io::read_partition("{}\n{3}\n", Poset::chain(2), "part"); }).find("part:2:") !=
        std::string::npos);
}

TEST_CASE("JSON round trips") {
  for (const auto& p : corpus::labeled_posets_up_to(4)) {
    CHECK(io::poset_from_json(io::poset_to_json(p)) == p);
    CHECK(io::read_poset(io::dump(io::poset_to_json(p))) == p);
    const auto e = partition_iso(p);
    const auto back = io::partition_from_json(io::partition_to_json(e));
    CHECK(back == e);
    CHECK(back.kind() == e.kind());
    CHECK(io::read_partition(io::dump(io::partition_to_json(e)), p) == e);
  }
  const auto g = io::read_code("q=9\nn=3\nk=2\n1 8 0\n0 3 4\n");
  const auto back = io::code_from_json(io::code_to_json(g));
  CHECK(back.rows() == g.rows());
  CHECK(back.field() == g.field());
  CHECK(io::code_to_json(g)["modulus"] == std::vector<int>{1, 1, 2});
  CHECK(io::read_code(io::dump(io::code_to_json(g))).rows() == g.rows());
  CHECK_THROWS_AS(io::read_partition(io::dump(io::partition_to_json(partition_iso(Poset::chain(2)))), Poset::chain(3)),
                  Error);
}
