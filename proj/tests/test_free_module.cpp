#include <gtest/gtest.h>

#include "grhopf/element.hpp"
#include "grhopf/errors.hpp"
#include "test_support.hpp"

using namespace grhopf;
using namespace grhopf::testing;

namespace {

const QTPolynomial kOne = QTPolynomial::one();
const QTPolynomial kQ = QTPolynomial::monomial(1, 0);
const QTPolynomial kT = QTPolynomial::monomial(0, 1);

BasisKey order(std::string_view s) { return parse_key_literal(KeyKind::LinearOrder, s); }

}  // namespace

TEST(BasisKey, LiteralsRoundTrip) {
  const std::vector<std::pair<KeyKind, std::string>> cases = {
      {KeyKind::LinearOrder, "c<a<b"}, {KeyKind::Orientation, "a>b,c>b"}, {KeyKind::Composition, "a,c|b"},
      {KeyKind::PartitionM, "a,c/b"},  {KeyKind::PartitionP, "a/b/c"},    {KeyKind::FlatM, "ab,bc"},
      {KeyKind::MatchingP, "ab"},      {KeyKind::LinearOrder, ""},         {KeyKind::FlatP, ""},
  };
  for (const auto& [kind, text] : cases) {
    const BasisKey k = parse_key_literal(kind, text);
    EXPECT_EQ(k.kind(), kind);
    EXPECT_EQ(k.literal(), text);
    EXPECT_EQ(parse_key_literal(kind, k.literal()), k);
  }
  EXPECT_EQ(BasisKey::unit().literal(), "1");
}

TEST(BasisKey, CanonicalSerialization) {
  EXPECT_EQ(parse_key_literal(KeyKind::Composition, "c|b,a").literal(), "c|a,b");
  EXPECT_EQ(parse_key_literal(KeyKind::PartitionM, "c/b,a").literal(), "a,b/c");
  EXPECT_EQ(parse_key_literal(KeyKind::FlatM, "cb,ba").literal(), "ab,bc");
  EXPECT_EQ(parse_key_literal(KeyKind::Orientation, "c>b,a>b").literal(), "a>b,c>b");
  EXPECT_EQ(parse_key_literal(KeyKind::FlatM, "v2-v1").literal(), "v1-v2");
}

TEST(BasisKey, MalformedLiteralsCarryAColumn) {
  const std::vector<std::pair<KeyKind, std::string>> bad = {
      {KeyKind::LinearOrder, "a<<b"}, {KeyKind::LinearOrder, "a<b<a"}, {KeyKind::Orientation, "a>"},
      {KeyKind::Composition, "a||b"}, {KeyKind::PartitionM, "a/a"}, {KeyKind::Composition, "a,b|b"},    {KeyKind::FlatM, "abc"},
      {KeyKind::FlatM, "aa"},
  };
  for (const auto& [kind, text] : bad) {
    try {
      parse_key_literal(kind, text);
      ADD_FAILURE() << "accepted " << text;
    } catch (const InputError& e) {
      EXPECT_GT(e.column(), 0) << text << ": " << e.what();
    }
  }
}

TEST(BasisKey, RetagKeepsPayload) {
  const BasisKey m = parse_key_literal(KeyKind::PartitionM, "a,b/c");
  const BasisKey p = m.retagged(KeyKind::PartitionP);
  EXPECT_EQ(p.kind(), KeyKind::PartitionP);
  EXPECT_EQ(p.blocks(), m.blocks());
  EXPECT_NE(p, m);
}

TEST(Element, CombineCancels) {
  const auto g = share(k2());
  const Element a = Element::basis_vector(MonoidId::L, g, order("a<b"));
  EXPECT_TRUE(elem_combine(a, a, kOne, -kOne).is_zero());
  EXPECT_TRUE(elem_combine(a, a, QTPolynomial::zero(), QTPolynomial::zero()).is_zero());
  EXPECT_TRUE(a.scaled(QTPolynomial::zero()).is_zero());
}

TEST(Element, CombineTwoTerms) {
  const auto g = share(k2());
  const Element a = Element::basis_vector(MonoidId::L, g, order("a<b"));
  const Element b = Element::basis_vector(MonoidId::L, g, order("b<a"));
  const Element sum = elem_combine(a, b, kOne, kQ);
  EXPECT_EQ(sum.size(), 2u);
  EXPECT_EQ(sum.coefficient(order("a<b")), kOne);
  EXPECT_EQ(sum.coefficient(order("b<a")), kQ);
  EXPECT_EQ(sum.to_string(), "[a<b] + q*[b<a]");
}

TEST(Element, MismatchedContextsAreRejected) {
  const Element a = Element::basis_vector(MonoidId::L, share(k2()), order("a<b"));
  const Element other_graph = Element::basis_vector(MonoidId::L, share(discrete_graph({"a", "b"})), order("a<b"));
  EXPECT_THROW(elem_combine(a, other_graph, kOne, kOne), InputError);
  const Element other_monoid = Element::basis_vector(MonoidId::Pi_m, share(k2()),
                                                     parse_key_literal(KeyKind::PartitionM, "a/b"));
  EXPECT_THROW(elem_combine(a, other_monoid, kOne, kOne), InputError);
  EXPECT_THROW(Element::basis_vector(MonoidId::Pi_m, share(k2()), parse_key_literal(KeyKind::PartitionP, "a/b")),
               InputError);
}

TEST(Element, LinearExtendExamples) {
  const auto g = share(k2());
  const BasisKey k1 = order("a<b"), k2key = order("b<a");
  const Element m = Element::basis_vector(MonoidId::Pi_m, g, parse_key_literal(KeyKind::PartitionM, "a/b"));
  const std::map<BasisKey, Element> table = {{k1, m}, {k2key, m}};

  EXPECT_TRUE(linear_extend(table, Element(MonoidId::L, g)).is_zero());
  EXPECT_EQ(linear_extend(table, Element::basis_vector(MonoidId::L, g, k1)), m);

  Element x(MonoidId::L, g);
  x.add(k1, kQ);
  x.add(k2key, kT);
  EXPECT_EQ(linear_extend(table, x), m.scaled(kQ + kT));

  const std::map<BasisKey, Element> partial = {{k1, m}};
  EXPECT_THROW(linear_extend(partial, x), std::logic_error);
}

TEST(Element, IdentityExtensionIsIdentity) {
  const auto g = share(path3());
  Element x(MonoidId::L, g);
  x.add(order("a<b<c"), kQ * kT);
  x.add(order("c<b<a"), -kOne);
  const Element y = linear_extend(x, MonoidId::L, g, [&](const BasisKey& k) {
    return Element::basis_vector(MonoidId::L, g, k);
  });
  EXPECT_EQ(y, x);
}

TEST(Element, NormalizationDropsZeros) {
  Element x(MonoidId::L, share(k2()));
  x.add(order("a<b"), kQ);
  x.add(order("a<b"), -kQ);
  EXPECT_TRUE(x.is_zero());
  EXPECT_EQ(x.to_string(), "0");
}

TEST(TensorElement, AccumulatesAndCancels) {
  const auto l = share(Graph({"a"}, {})), r = share(Graph({"b"}, {}));
  TensorElement t(MonoidId::L, l, r);
  t.add(order("a"), order("b"), kQ);
  t.add(order("a"), order("b"), kT);
  EXPECT_EQ(t.terms().begin()->second, kQ + kT);
  t.add(order("a"), order("b"), -(kQ + kT));
  EXPECT_TRUE(t.is_zero());
}
