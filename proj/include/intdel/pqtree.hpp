#ifndef INTDEL_PQTREE_HPP
#define INTDEL_PQTREE_HPP

#include <algorithm>
#include <memory>
#include <vector>

#include "intdel/errors.hpp"

namespace intdel {

// PQ-tree over leaves 0..m-1 representing the orders in which every reduced
// set appears consecutively. P children permute freely; Q children are fixed
// up to reversal. reduce() applies one consecutiveness constraint; after a
// failed reduce the tree is spent and must be discarded.
class PQTree {
 public:
  explicit PQTree(int num_leaves) : num_leaves_(num_leaves) {
    if (num_leaves <= 0) {
      root_ = nullptr;
      return;
    }
    if (num_leaves == 1) {
      root_ = make_leaf(0);
      return;
    }
    root_ = std::make_unique<Node>();
    root_->type = Node::P;
    for (int i = 0; i < num_leaves; ++i) root_->kids.push_back(make_leaf(i));
  }

  bool reduce(const std::vector<int>& full_leaves) {
    if (int(full_leaves.size()) <= 1 || int(full_leaves.size()) >= num_leaves_)
      return true;
    std::vector<char> in_s(num_leaves_, 0);
    for (int leaf : full_leaves) in_s[leaf] = 1;
    int total_full = int(full_leaves.size());

    // Descend to the pertinent root: the lowest node covering all of S.
    std::unique_ptr<Node>* slot = &root_;
    while ((*slot)->type != Node::Leaf) {
      std::unique_ptr<Node>* next = nullptr;
      for (auto& kid : (*slot)->kids) {
        if (count_full(kid.get(), in_s) == total_full) {
          next = &kid;
          break;
        }
      }
      if (!next) break;
      slot = next;
    }
    if (count_full(slot->get(), in_s) == count_leaves(slot->get()))
      return true;  // subtree entirely full: already consecutive

    Red r = transform(std::move(*slot), true, in_s);
    if (r.kind == Red::Fail) return false;
    ensure(r.kind == Red::Done && r.node != nullptr, "pqtree: bad root reduction");
    *slot = std::move(r.node);
    return true;
  }

  std::vector<int> frontier() const {
    std::vector<int> out;
    collect(root_.get(), out);
    return out;
  }

 private:
  struct Node {
    enum Type { Leaf, P, Q } type = Leaf;
    int leaf = -1;
    std::vector<std::unique_ptr<Node>> kids;
  };

  struct Red {
    enum Kind { Fail, Empty, Full, Partial, Done } kind = Fail;
    std::unique_ptr<Node> node;                 // Empty / Full / Done
    std::vector<std::unique_ptr<Node>> seq;     // Partial: empty side .. full side
  };

  static std::unique_ptr<Node> make_leaf(int id) {
    auto n = std::make_unique<Node>();
    n->type = Node::Leaf;
    n->leaf = id;
    return n;
  }

  static int count_leaves(const Node* n) {
    if (n->type == Node::Leaf) return 1;
    int c = 0;
    for (auto& k : n->kids) c += count_leaves(k.get());
    return c;
  }

  static int count_full(const Node* n, const std::vector<char>& in_s) {
    if (n->type == Node::Leaf) return in_s[n->leaf] ? 1 : 0;
    int c = 0;
    for (auto& k : n->kids) c += count_full(k.get(), in_s);
    return c;
  }

  // One node, or a fresh P grouping several.
  static std::unique_ptr<Node> group(std::vector<std::unique_ptr<Node>> kids) {
    if (kids.size() == 1) return std::move(kids[0]);
    auto n = std::make_unique<Node>();
    n->type = Node::P;
    n->kids = std::move(kids);
    return n;
  }

  // Ordered sequence as a node: 2 kids carry no order beyond reversal, so a
  // 2-wide Q canonicalizes to P.
  static std::unique_ptr<Node> make_ordered(std::vector<std::unique_ptr<Node>> kids) {
    if (kids.size() == 1) return std::move(kids[0]);
    auto n = std::make_unique<Node>();
    n->type = kids.size() == 2 ? Node::P : Node::Q;
    n->kids = std::move(kids);
    return n;
  }

  Red transform(std::unique_ptr<Node> nd, bool root, const std::vector<char>& in_s) {
    if (nd->type == Node::Leaf) {
      Red r;
      r.kind = in_s[nd->leaf] ? Red::Full : Red::Empty;
      r.node = std::move(nd);
      return r;
    }

    struct Kid {
      int label;  // 0 empty, 1 full, 2 partial
      std::unique_ptr<Node> node;
      std::vector<std::unique_ptr<Node>> seq;
    };
    std::vector<Kid> kids;
    kids.reserve(nd->kids.size());
    for (auto& k : nd->kids) {
      int cf = count_full(k.get(), in_s);
      Kid kid;
      if (cf == 0) {
        kid.label = 0;
        kid.node = std::move(k);
      } else if (cf == count_leaves(k.get())) {
        kid.label = 1;
        kid.node = std::move(k);
      } else {
        Red r = transform(std::move(k), false, in_s);
        if (r.kind == Red::Fail) return Red{};
        ensure(r.kind == Red::Partial, "pqtree: non-root child must be partial");
        kid.label = 2;
        kid.seq = std::move(r.seq);
      }
      kids.push_back(std::move(kid));
    }

    if (nd->type == Node::P) return transform_p(std::move(nd), root, std::move(kids));
    return transform_q(std::move(nd), root, std::move(kids));
  }

  Red transform_p(std::unique_ptr<Node> nd, bool root, auto kids) {
    std::vector<std::unique_ptr<Node>> empties, fulls;
    std::vector<std::vector<std::unique_ptr<Node>>> parts;
    for (auto& kid : kids) {
      if (kid.label == 0)
        empties.push_back(std::move(kid.node));
      else if (kid.label == 1)
        fulls.push_back(std::move(kid.node));
      else
        parts.push_back(std::move(kid.seq));
    }

    if (!root) {
      if (parts.size() > 1) return Red{};
      Red r;
      r.kind = Red::Partial;
      if (!empties.empty()) r.seq.push_back(group(std::move(empties)));
      if (!parts.empty())
        for (auto& piece : parts[0]) r.seq.push_back(std::move(piece));
      if (!fulls.empty()) r.seq.push_back(group(std::move(fulls)));
      ensure(r.seq.size() >= 2, "pqtree: degenerate partial");
      return r;
    }

    if (parts.size() > 2) return Red{};
    std::vector<std::unique_ptr<Node>> newkids = std::move(empties);
    if (parts.empty()) {
      newkids.push_back(group(std::move(fulls)));
    } else {
      std::vector<std::unique_ptr<Node>> qkids = std::move(parts[0]);
      if (!fulls.empty()) qkids.push_back(group(std::move(fulls)));
      if (parts.size() == 2)
        for (auto it = parts[1].rbegin(); it != parts[1].rend(); ++it)
          qkids.push_back(std::move(*it));
      newkids.push_back(make_ordered(std::move(qkids)));
    }

    Red r;
    r.kind = Red::Done;
    if (newkids.size() == 1) {
      r.node = std::move(newkids[0]);
    } else {
      nd->type = Node::P;
      nd->kids = std::move(newkids);
      r.node = std::move(nd);
    }
    return r;
  }

  Red transform_q(std::unique_ptr<Node> nd, bool root, auto kids) {
    nd.reset();  // the q-node is rebuilt from its surviving children
    size_t t = kids.size();
    if (!root) {
      // legal pattern (up to reversal): E* [partial] F*, fulls flush right
      auto matches = [&](auto& ks) {
        size_t i = 0;
        while (i < t && ks[i].label == 0) ++i;
        if (i == t) return false;  // all empty: excluded by mixed guard
        size_t block = i;
        if (ks[i].label == 2) ++block;
        for (size_t x = block; x < t; ++x)
          if (ks[x].label != 1) return false;
        return true;
      };
      if (!matches(kids)) {
        std::reverse(kids.begin(), kids.end());
        if (!matches(kids)) return Red{};
      }
      Red r;
      r.kind = Red::Partial;
      for (auto& kid : kids) {
        if (kid.label == 2)
          for (auto& piece : kid.seq) r.seq.push_back(std::move(piece));
        else
          r.seq.push_back(std::move(kid.node));
      }
      ensure(r.seq.size() >= 2, "pqtree: degenerate partial");
      return r;
    }

    // root pattern: E* [partial] F* [partial] E*
    size_t i = 0, j = t - 1;
    while (i < t && kids[i].label == 0) ++i;
    while (j > 0 && kids[j].label == 0) --j;
    ensure(i <= j, "pqtree: pertinent root with no pertinent child");
    for (size_t x = i + 1; x < j; ++x)
      if (kids[x].label != 1) return Red{};

    std::vector<std::unique_ptr<Node>> newkids;
    for (size_t x = 0; x < i; ++x) newkids.push_back(std::move(kids[x].node));
    for (size_t x = i; x <= j; ++x) {
      if (kids[x].label != 2) {
        newkids.push_back(std::move(kids[x].node));
      } else if (x == i) {
        for (auto& piece : kids[x].seq) newkids.push_back(std::move(piece));
      } else if (x == j) {
        for (auto it = kids[x].seq.rbegin(); it != kids[x].seq.rend(); ++it)
          newkids.push_back(std::move(*it));
      } else {
        return Red{};
      }
    }
    for (size_t x = j + 1; x < t; ++x) newkids.push_back(std::move(kids[x].node));

    Red r;
    r.kind = Red::Done;
    r.node = make_ordered(std::move(newkids));
    return r;
  }

  static void collect(const Node* n, std::vector<int>& out) {
    if (!n) return;
    if (n->type == Node::Leaf) {
      out.push_back(n->leaf);
      return;
    }
    for (auto& k : n->kids) collect(k.get(), out);
  }

  int num_leaves_;
  std::unique_ptr<Node> root_;
};

}  // namespace intdel

#endif
