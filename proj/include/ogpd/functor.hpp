// Ordered functors between ordered groupoids: validation, star
// classification, kernels, natural transformations, pullbacks.

#pragma once

#include <vector>

#include "ogpd/groupoid.hpp"

namespace ogpd {

class OrderedFunctor {
 public:
  OrderedFunctor() = default;
  OrderedFunctor(GroupoidPtr source, GroupoidPtr target, std::vector<ArrowId> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

  const GroupoidPtr& source() const { return source_; }
  const GroupoidPtr& target() const { return target_; }
  const std::vector<ArrowId>& map() const { return map_; }

  ArrowId operator()(ArrowId a) const { return map_[a]; }
  ObjectId obj(ObjectId e) const { return target_->dom(map_[source_->identity(e)]); }

  bool operator==(const OrderedFunctor& other) const {
    return source_ == other.source_ && target_ == other.target_ && map_ == other.map_;
  }

 private:
  GroupoidPtr source_, target_;
  std::vector<ArrowId> map_;
};

// Checks functoriality (identities, dom/cod, inverses, composites) and
// order preservation against raw tables; target need not itself be a
// valid ordered groupoid, so corrupted negatives can be probed.
ValidationReport validate_functor_data(const GroupoidData& src, const GroupoidData& tgt,
                                       const std::vector<ArrowId>& map);

ValidationReport validate_functor(const OrderedFunctor& f);

// Validating constructor; throws domain_error when the map is not an
// ordered functor.
OrderedFunctor make_functor(GroupoidPtr source, GroupoidPtr target, std::vector<ArrowId> map);

OrderedFunctor identity_functor(GroupoidPtr g);
OrderedFunctor compose_functors(const OrderedFunctor& f, const OrderedFunctor& g);

struct StarClass {
  bool surjective = true;
  bool injective = true;
  bool bijective() const { return surjective && injective; }
};

// Fibration = star-surjective, immersion = star-injective,
// covering = star-bijective.
StarClass star_class_at(const OrderedFunctor& f, ObjectId e);
StarClass star_class(const OrderedFunctor& f);

// Arrows sent to identities.  Also cross-checks that star-injectivity
// coincides with the kernel being exactly the identities.
std::vector<ArrowId> kernel(const OrderedFunctor& f);

// Wide subgroupoid test: contains all identities, closed under inverse
// and defined composition.
ValidationReport check_wide_subgroupoid(const OrderedGroupoid& g, const std::vector<ArrowId>& arrows);

// Subgroupoid test for arbitrary arrow subsets (identities of touched
// objects, inverses, composites).
bool is_subgroupoid(const OrderedGroupoid& g, const std::vector<ArrowId>& arrows);

struct NatTrans {
  OrderedFunctor from, to;
  std::vector<ArrowId> component;  // per object of the common source
};

ValidationReport validate_nat_trans(const NatTrans& t);

// Bijective functor whose inverse map also preserves order.
bool is_order_isomorphism(const OrderedFunctor& f);

// Injective on arrows and order-reflecting on its image.
bool is_ordered_embedding(const OrderedFunctor& f);

// Pullback of f along g inside product(f.source, g.source): the wide
// sub-ordered-groupoid of pairs agreeing in the common target.
struct PullbackGroupoid {
  GroupoidPtr g;
  OrderedFunctor to_left, to_right;
  std::vector<std::pair<ArrowId, ArrowId>> arrow_pairs;  // per arrow of g
};

PullbackGroupoid pullback(const OrderedFunctor& f, const OrderedFunctor& g);

}  // namespace ogpd
