#include "pcl/classifier.hpp"

#include <functional>

#include "pcl/errors.hpp"
#include "pcl/perfect_code.hpp"

namespace pcl {

std::string to_string(FamilyShape shape) {
  switch (shape) {
    case FamilyShape::A_Cs_B2: return "<a c^s, b^2>";
    case FamilyShape::A_B2j_Cs_B2kr_C: return "<a b^(2j) c^s, b^(2^k r) c>";
    case FamilyShape::A_Bt_C: return "<a b^t, c>";
    case FamilyShape::Ad_Cs_B2: return "<a^d c^s, b^2>";
    case FamilyShape::Ad_B2j_Cs_B2kr_C: return "<a^d b^(2j) c^s, b^(2^k r) c>";
    case FamilyShape::At_Bd_Cs_A2: return "<a^t b^d c^s, a^2>";
    case FamilyShape::At_Bd_Cs_A2lr_C: return "<a^t b^d c^s, a^(2^l r) c>";
    case FamilyShape::Ad_Bt_C: return "<a^d b^t, c>";
    case FamilyShape::At_Bd_C: return "<a^t b^d, c>";
  }
  return "?";
}

std::string to_string(ClassifierKind kind) {
  switch (kind) {
    case ClassifierKind::Abelian2Group: return "abelian-2group";
    case ClassifierKind::A1TwoGroup: return "a1-2group";
    case ClassifierKind::Dihedral: return "dihedral";
    case ClassifierKind::AbelianSylow2: return "abelian-sylow2";
    case ClassifierKind::CodePerfect: return "code-perfect";
    case ClassifierKind::None: return "none";
  }
  return "?";
}

namespace {

bool is_two_group(const Group& g) {
  if (g.order() == 1) return true;
  const auto pp = prime_power(g.order());
  return pp && pp->first == 2;
}

ClassificationOutcome trivial_or_whole() { return {true, "trivial-or-whole", std::nullopt}; }

}  // namespace

ClassificationOutcome classify_abelian_2group(const Group& g, const Subgroup& h) {
  if (!g.is_abelian() || !is_two_group(g))
    throw WrongClassifier(g.label() + " is not an abelian 2-group");
  return classify_abelian_2group(g, frattini(g), h);
}

ClassificationOutcome classify_abelian_2group(const Group& g, const Subgroup& frattini_g,
                                              const Subgroup& h) {
  if (!g.is_abelian() || !is_two_group(g))
    throw WrongClassifier(g.label() + " is not an abelian 2-group");
  if (h.is_trivial() || h.is_whole()) return trivial_or_whole();
  const ElementSet meet = h.members() & frattini_g.members();
  const bool ok = meet.is_subset_of(frattini(h).members());
  return {ok, "abelian-2group/frattini", std::nullopt};
}

namespace {

class FamilyEnumerator {
 public:
  FamilyEnumerator(const Group& g, const FamilyRecognition& rec, const Subgroup& h)
      : g_(g), rec_(rec), h_(h), A_(1 << rec.n), B_(1 << rec.m) {}

  std::optional<FamilyMatch> run() {
    if (rec_.n == 1) {
      // <a c^s, b^2>
      for (int s = 0; s < 2; ++s)
        if (try_pair(elem(1, 0, s), elem(0, 2, 0))) return hit(FamilyShape::A_Cs_B2, {.s = s});
      // <a b^(2j) c^s, b^(2^k r) c>
      if (auto m = second_family(/*odd_a=*/false)) return m;
      // <a b^t, c>
      for (int t = 0; t < B_; ++t)
        if (try_pair(elem(1, t, 0), c())) return hit(FamilyShape::A_Bt_C, {.t = t});
      if (auto m = at_bd_c()) return m;
      return std::nullopt;
    }
    // <a^d c^s, b^2>
    for (int d = 1; d < A_; d += 2)
      for (int s = 0; s < 2; ++s)
        if (try_pair(elem(d, 0, s), elem(0, 2, 0))) return hit(FamilyShape::Ad_Cs_B2, {.d = d, .s = s});
    if (auto m = second_family(/*odd_a=*/true)) return m;
    // <a^t b^d c^s, a^2>
    for (int t = 0; t < A_; ++t)
      for (int d = 1; d < B_; d += 2)
        for (int s = 0; s < 2; ++s)
          if (try_pair(elem(t, d, s), elem(2, 0, 0)))
            return hit(FamilyShape::At_Bd_Cs_A2, {.t = t, .d = d, .s = s});
    // <a^t b^d c^s, a^(2^l r) c>
    for (int t = 0; t < A_; ++t)
      for (int d = 1; d < B_; d += 2)
        for (int s = 0; s < 2; ++s)
          for (int l = 1; l < rec_.n; ++l)
            for (int r = 1; r < (1 << (rec_.n - l)); r += 2)
              if (try_pair(elem(t, d, s), elem((1 << l) * r, 0, 1)))
                return hit(FamilyShape::At_Bd_Cs_A2lr_C, {.t = t, .d = d, .r = r, .l = l, .s = s});
    if (auto m = at_bd_c()) return m;
    // <a^d b^t, c>
    for (int d = 1; d < A_; d += 2)
      for (int t = 0; t < B_; ++t)
        if (try_pair(elem(d, t, 0), c())) return hit(FamilyShape::Ad_Bt_C, {.t = t, .d = d});
    return std::nullopt;
  }

 private:
  struct Params {
    int t = 0, j = 0, d = 0, r = 0, k = 0, l = 0, s = 0;
  };

  static std::optional<FamilyMatch> hit(FamilyShape shape, Params p) {
    return FamilyMatch{shape, p.t, p.j, p.d, p.r, p.k, p.l, p.s};
  }

  Element c() const { return rec_.c; }

  // a^i b^j c^s
  Element elem(long long i, long long j, int s) const {
    Element x = g_.mul(g_.pow(rec_.a, i), g_.pow(rec_.b, j));
    return s ? g_.mul(x, rec_.c) : x;
  }

  bool try_pair(Element x, Element y) const {
    if (!h_.contains(x) || !h_.contains(y)) return false;
    const Element gens[] = {x, y};
    return subgroup_generated(g_, gens).order() == h_.order();
  }

  // <a^d b^(2j) c^s, b^(2^k r) c>; d = 1 only when !odd_a.
  std::optional<FamilyMatch> second_family(bool odd_a) const {
    const FamilyShape shape = odd_a ? FamilyShape::Ad_B2j_Cs_B2kr_C : FamilyShape::A_B2j_Cs_B2kr_C;
    const int d_max = odd_a ? A_ : 2;
    for (int d = 1; d < d_max; d += 2)
      for (int j = 0; j < B_ / 2; ++j)
        for (int s = 0; s < 2; ++s)
          for (int k = 1; k < rec_.m; ++k) {
            // 2^k | 2^n2 j
            if (((static_cast<long long>(j) << rec_.n) % (1LL << k)) != 0) continue;
            for (int r = 1; r < (1 << (rec_.m - k)); r += 2)
              if (try_pair(elem(d, 2 * j, s), elem(0, (1LL << k) * r, 1)))
                return hit(shape, {.j = j, .d = odd_a ? d : 0, .r = r, .k = k, .s = s});
          }
    return std::nullopt;
  }

  // <a^t b^d, c>
  std::optional<FamilyMatch> at_bd_c() const {
    for (int t = 0; t < A_; ++t)
      for (int d = 1; d < B_; d += 2)
        if (try_pair(elem(t, d, 0), c())) return hit(FamilyShape::At_Bd_C, {.t = t, .d = d});
    return std::nullopt;
  }

  const Group& g_;
  const FamilyRecognition& rec_;
  const Subgroup& h_;
  int A_;
  int B_;
};

}  // namespace

std::optional<FamilyMatch> match_theorem_family(const Group& g, const FamilyRecognition& rec,
                                                const Subgroup& h) {
  if (rec.tag != FamilyTag::Nonmetacyclic)
    throw PreconditionError("family matching needs an M2(n2,m2,1) recognition");
  if (h.is_whole()) throw PreconditionError("family matching needs a proper subgroup");
  if (is_cyclic(h)) throw PreconditionError("family matching needs a noncyclic subgroup");
  return FamilyEnumerator(g, rec, h).run();
}

ClassificationOutcome classify_a1_2group(const Group& g, const Subgroup& h) {
  if (!is_two_group(g)) throw WrongClassifier(g.label() + " is not a 2-group");
  return classify_a1_2group(g, recognize_a1_family(g), h);
}

ClassificationOutcome classify_a1_2group(const Group& g, const FamilyRecognition& rec,
                                         const Subgroup& h) {
  if (rec.tag == FamilyTag::Abelian || rec.tag == FamilyTag::NotA1OrA0)
    throw WrongClassifier(g.label() + " is not minimal nonabelian (" + to_string(rec.tag) + ")");
  if (h.is_trivial() || h.is_whole()) return trivial_or_whole();
  if (rec.tag == FamilyTag::Q8) return {false, "a1/q8", std::nullopt};

  if (is_cyclic(h)) {
    const ElementSet squares = squares_set(g);
    bool nonsquare_generator = false;
    h.members().for_each([&](Element x) {
      if (g.element_order(x) == h.order() && !squares.contains(x)) nonsquare_generator = true;
    });
    return {nonsquare_generator, "a1/nonsquare-cyclic", std::nullopt};
  }

  if (rec.tag == FamilyTag::Metacyclic) {
    if (rec.n == 2 && rec.m == 1) {
      const bool klein = h.order() == 4 && involutions(h).count() == 4;
      return {klein, "a1/d8-klein", std::nullopt};
    }
    return {false, "a1/metacyclic-noncyclic", std::nullopt};
  }

  auto match = match_theorem_family(g, rec, h);
  if (match) return {true, "a1/family-match", match};
  return {false, "a1/no-family-match", std::nullopt};
}

ClassificationOutcome dihedral_classify(const Group& g, const DihedralWitness& w, const Subgroup& h) {
  const std::size_t n = g.order() / 2;
  if (g.order() % 2 != 0 || g.element_order(w.a) != n || g.mul(w.b, w.b) != Group::identity() ||
      g.conjugate(w.a, w.b) != g.inv(w.a))
    throw WrongClassifier(g.label() + ": witness is not a dihedral presentation");
  const Element gen[] = {w.a};
  const Subgroup rotations = subgroup_generated(g, gen);
  if (rotations.contains(w.b)) throw WrongClassifier(g.label() + ": reflection lies in <a>");
  if (!h.is_subgroup_of(rotations)) return {true, "dihedral", std::nullopt};
  const bool ok = (h.order() % 2 == 1) || ((n / h.order()) % 2 == 1);
  return {ok, "dihedral", std::nullopt};
}

ClassificationOutcome classify_abelian_sylow2(const Group& g, const Subgroup& h) {
  const Subgroup p0 = sylow(g, 2);
  if (p0.is_trivial()) throw WrongClassifier(g.label() + " has odd order");
  if (!is_abelian(p0)) throw WrongClassifier(g.label() + " has a nonabelian Sylow 2-subgroup");
  const Subgroup q = sylow(h, 2);
  const Subgroup p = sylow_containing(g, 2, q);
  const ElementSet meet = q.members() & frattini(p).members();
  const bool ok = meet.is_subset_of(frattini(q).members());
  return {ok, "abelian-sylow2/frattini", std::nullopt};
}

ClassifierDispatch select_classifier(const Group& g) {
  ClassifierDispatch d;
  if (is_two_group(g)) {
    if (g.is_abelian()) {
      d.kind = ClassifierKind::Abelian2Group;
      d.recognition.tag = FamilyTag::Abelian;
      d.frattini_of_group = frattini(g);
      return d;
    }
    d.recognition = recognize_a1_family(g);
    if (d.recognition.tag != FamilyTag::NotA1OrA0) {
      d.kind = ClassifierKind::A1TwoGroup;
      return d;
    }
  }
  if (g.order() >= 6) {
    if (auto w = recognize_dihedral(g)) {
      d.kind = ClassifierKind::Dihedral;
      d.dihedral = w;
      return d;
    }
  }
  const Subgroup p = sylow(g, 2);
  if (!p.is_trivial() && is_abelian(p)) {
    d.kind = ClassifierKind::AbelianSylow2;
    return d;
  }
  if (is_code_perfect(g)) d.kind = ClassifierKind::CodePerfect;
  return d;
}

std::optional<ClassificationOutcome> classify(const Group& g, const ClassifierDispatch& dispatch,
                                              const Subgroup& h) {
  switch (dispatch.kind) {
    case ClassifierKind::Abelian2Group:
      return dispatch.frattini_of_group ? classify_abelian_2group(g, *dispatch.frattini_of_group, h)
                                        : classify_abelian_2group(g, h);
    case ClassifierKind::A1TwoGroup:
      return classify_a1_2group(g, dispatch.recognition, h);
    case ClassifierKind::Dihedral:
      return dihedral_classify(g, *dispatch.dihedral, h);
    case ClassifierKind::AbelianSylow2:
      return classify_abelian_sylow2(g, h);
    case ClassifierKind::CodePerfect:
      return ClassificationOutcome{true, "code-perfect", std::nullopt};
    case ClassifierKind::None:
      break;
  }
  return std::nullopt;
}

}  // namespace pcl
