#include <gtest/gtest.h>

#include "hypernorm/error.hpp"
#include "hypernorm/monads.hpp"

using namespace hypernorm;

namespace {
  Value v(std::string_view text) {
    return parse_value(text);
  }

  Value hyper(std::string_view instance, std::string_view text,
              std::size_t arity) {
    return hypernorm_generic(instance_by_name(instance), v(text), arity);
  }

  std::vector<Value> atoms(std::initializer_list<char const*> names) {
    std::vector<Value> out;
    for (auto n : names) {
      out.push_back(Value::atom(n));
    }
    return out;
  }
}  // namespace

TEST(Value, ParsesAndPrintsCompactText) {
  for (auto text : {"a", "2:x", "{a:1/2,b:1/2}", "<1:a,1:a,2:x>", "[a,b]",
                    "(1/2*a,1/2*a)", "E{a:1/3,b:2/3}", "{1:{a:1}:1/3,2:<>:2/3}"}) {
    EXPECT_EQ(v(text).str(), text);
  }
  EXPECT_EQ(v(" { b : 1/2 , a : 1/2 } "), v("{a:1/2,b:1/2}"));
  EXPECT_THROW(v("{a:1/2}"), ParseError);
  EXPECT_THROW(v("{a:1/2"), ParseError);
  EXPECT_THROW(v("<a,,b>"), ParseError);
}

TEST(Instances, LookupByNameAndAlias) {
  EXPECT_EQ(instance_by_name("D").name, "dist");
  EXPECT_EQ(instance_by_name("M").name, "multiset");
  EXPECT_EQ(instance_by_name("S").name, "ne_multiset");
  EXPECT_EQ(instance_by_name("Pf").name, "powerset");
  EXPECT_EQ(instance_by_name("Pne").name, "ne_powerset");
  EXPECT_EQ(instance_by_name("Dm").name, "multidist");
  EXPECT_EQ(instance_by_name("E").name, "expectation");
  EXPECT_THROW(instance_by_name("giry"), Error);
  EXPECT_EQ(all_instances().size(), 7u);
}

TEST(Dist, HypernormaliseMixedTags) {
  EXPECT_EQ(hyper("dist", "{1:a:1/4,1:b:1/4,2:x:1/2}", 2),
            v("{1:{a:1/2,b:1/2}:1/2,2:{x:1}:1/2}"));
  EXPECT_EQ(hyper("dist", "{1:a:1/3,1:b:2/3}", 2), v("{1:{a:1/3,b:2/3}:1}"));
  EXPECT_EQ(hyper("dist", "{2:x:1}", 2), v("{2:{x:1}:1}"));
  EXPECT_EQ(hyper("dist", "{1:a:1/4,3:z:3/4}", 3), v("{1:{a:1}:1/4,3:{z:1}:3/4}"));
}

TEST(Dist, DirectFormulaAgrees) {
  auto d = instance_dist();
  for (auto text : {"{1:a:1/4,1:b:1/4,2:x:1/2}", "{2:y:1}", "{1:a:1/5,2:x:2/5,3:z:2/5}"}) {
    EXPECT_EQ(d.hypernorm_direct(v(text), 3), hypernorm_generic(d, v(text), 3));
  }
}

TEST(Dist, SplitAndSingletonCarrier) {
  auto d = instance_dist();
  auto t = d.split(v("{1:a:1/2,2:x:1/2}"), 2);
  auto const& n = std::get<GiryNary>(t);
  EXPECT_EQ(n.parts().at(1).weight, Q01(1, 2));
  EXPECT_EQ(n.parts().at(1).value, v("{a:1}"));
  EXPECT_EQ(n.parts().at(2).value, v("{x:1}"));
  EXPECT_EQ(d.enumerate(atoms({"a"}), {}).size(), 1u);
}

TEST(Multiset, HypernormaliseAndSplit) {
  EXPECT_EQ(hyper("multiset", "<1:a,1:a,2:x>", 2), v("<1:<a,a>,2:<x>>"));
  EXPECT_EQ(hyper("multiset", "<>", 2), v("<1:<>,2:<>>"));
  auto t = instance_multiset().split(v("<1:a,2:x,1:a>"), 2);
  EXPECT_EQ(std::get<CartesianTuple>(t).components,
            (std::vector<Value>{v("<a,a>"), v("<x>")}));
  EXPECT_EQ(instance_multiset().join(v("<<a>,<a,b>>")), v("<a,a,b>"));
}

TEST(NonemptyMultiset, Hypernormalise) {
  EXPECT_EQ(hyper("ne_multiset", "<1:a,1:b>", 2), v("<1:<a,b>>"));
  EXPECT_EQ(hyper("ne_multiset", "<1:a,2:x>", 2), v("<1:<a>,2:<x>>"));
  auto t = instance_ne_multiset().split(v("<2:x>"), 2);
  auto const& n = std::get<TrivialNary>(t);
  ASSERT_EQ(n.parts().size(), 1u);
  EXPECT_EQ(n.parts().at(2).value, v("<x>"));
  EXPECT_THROW(instance_ne_multiset().validate(v("<>")), Error);
}

TEST(Powerset, Hypernormalise) {
  EXPECT_EQ(hyper("powerset", "[1:a,1:b,2:x]", 2), v("[1:[a,b],2:[x]]"));
  EXPECT_EQ(hyper("powerset", "[]", 2), v("[1:[],2:[]]"));
  EXPECT_EQ(instance_ne_powerset().enumerate(atoms({"a"}), {}).size(), 1u);
  EXPECT_EQ(hyper("ne_powerset", "[1:a,1:b]", 2), v("[1:[a,b]]"));
}

TEST(Multidist, KeepsRepeatedEntries) {
  EXPECT_EQ(hyper("multidist", "(1/2*1:a,1/2*1:a)", 2), v("(1*1:(1/2*a,1/2*a))"));
  EXPECT_EQ(hyper("multidist", "(1/4*1:a,1/4*1:a,1/2*2:x)", 2),
            v("(1/2*1:(1/2*a,1/2*a),1/2*2:(1*x))"));
  EXPECT_EQ(instance_multidist().join(v("(1*(1*a))")), v("(1*a)"));
}

TEST(Expectation, HypernormaliseMatchesDist) {
  EXPECT_EQ(hyper("expectation", "E{1:a:1/4,1:b:1/4,2:x:1/2}", 2),
            v("E{1:E{a:1/2,b:1/2}:1/2,2:E{x:1}:1/2}"));
}

TEST(Instances, SplitMergeRoundTrip) {
  SumSignature sig({Carrier("A", {"a", "b"}), Carrier("B", {"x"})});
  for (auto const& m : all_instances()) {
    for (auto const& t : m.enumerate(sum_atoms(sig), {2, 4})) {
      EXPECT_EQ(m.merge(m.split(t, 2)), t) << m.name << " " << t.str();
    }
  }
}

TEST(Instances, SignatureCheck) {
  SumSignature sig({Carrier("A", {"a"}), Carrier("B", {"x"})});
  auto d = instance_dist();
  EXPECT_NO_THROW(check_against(d, sig, v("{1:a:1/2,2:x:1/2}")));
  EXPECT_THROW(check_against(d, sig, v("{1:z:1}")), SignatureError);
  EXPECT_THROW(check_against(d, sig, v("{3:a:1}")), SignatureError);
}
