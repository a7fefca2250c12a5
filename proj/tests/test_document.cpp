#include "doctest.h"

#include "onefact/catalog.hpp"
#include "onefact/document.hpp"
#include "onefact/field.hpp"
#include "oracle.hpp"

using namespace onefact;

TEST_SUITE("document") {
  TEST_CASE("canonical bytes for a tiny document") {
    const MultiFactorization mf(2, 1, lucas_factorization(4));
    CHECK(serialize_document(mf) ==
          R"({"factors":[[[0,1],[2,3]],[[0,2],[1,3]],[[0,3],[1,2]]],"format":1,"lambda":1,)"
          R"("model":{"kind":"plain"},"n":2})");
  }

  TEST_CASE("round trips") {
    const auto cyc = construct(6, 3);
    const auto t3 = construct_t3(3, 2);
    for (const auto *mf : {&cyc.mf, &t3}) {
      const auto text = serialize_document(*mf);
      const auto back = parse_document(text);
      CHECK(back == *mf);
      CHECK(serialize_document(back) == text);
    }
    const auto back = parse_document(serialize_document(cyc.mf));
    CHECK(back.model().kind == ModelKind::Cyclic);
    CHECK(back.model().starters == cyc.mf.model().starters);
    const auto f = parse_document(serialize_document(t3));
    CHECK(f.model().kind == ModelKind::Field);
    CHECK(f.model().p == 3);
    CHECK(f.model().m == 2);
    CHECK(f.model().modulus == std::vector<int>{2, 1, 1});
  }

  TEST_CASE("parsing canonicalizes") {
    const std::string loose = R"( { "n": 2, "lambda": 1, "format": 1, "model": {"kind": "plain"},
      "factors": [ [[3,2],[1,0]], [[1,2],[3,0]], [[2,0],[3,1]] ] } )";
    const auto mf = parse_document(loose);
    CHECK(serialize_document(mf) == serialize_document(MultiFactorization(2, 1, lucas_factorization(4))));
  }

  TEST_CASE("parse errors") {
    const auto text = serialize_document(construct_t3(5, 1));
    CHECK_CODE(parse_document(text.substr(0, text.size() / 2)), ErrorCode::ParseError);
    CHECK_CODE(parse_document("[]"), ErrorCode::ParseError);
    CHECK_CODE(parse_document(R"({"format":2,"n":2,"lambda":1,"model":{"kind":"plain"},"factors":[]})"),
               ErrorCode::ParseError);
    CHECK_CODE(parse_document(R"({"format":1,"n":2,"lambda":1,"model":{"kind":"plain"},"factors":[[[0,1],[1,2]]]})"),
               ErrorCode::ParseError);
    CHECK_CODE(parse_document(R"({"format":1,"n":2,"lambda":1,"model":{"kind":"odd"},"factors":[]})"),
               ErrorCode::ParseError);
    CHECK_CODE(parse_document(R"({"format":1,"n":"2","lambda":1,"model":{"kind":"plain"},"factors":[]})"),
               ErrorCode::ParseError);
  }
}
