#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace charbasis::detail {

/// Thread-safe memo table: concurrent lookups, serialized insertion.
/// Entries are never erased, so returned references stay valid.
template <class Key, class Value>
class Memo {
 public:
  const Value* find(const Key& key) const {
    std::shared_lock lock(mu_);
    auto it = table_.find(key);
    return it == table_.end() ? nullptr : &it->second;
  }

  const Value& insert(Key key, Value value) {
    std::unique_lock lock(mu_);
    return table_.try_emplace(std::move(key), std::move(value)).first->second;
  }

  template <class Compute>
  const Value& get(const Key& key, Compute&& compute) {
    if (const Value* hit = find(key)) return *hit;
    return insert(key, compute());
  }

 private:
  mutable std::shared_mutex mu_;
  std::map<Key, Value> table_;
};

}  // namespace charbasis::detail
