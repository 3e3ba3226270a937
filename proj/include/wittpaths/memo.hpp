#ifndef WITTPATHS_MEMO_HPP
#define WITTPATHS_MEMO_HPP

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace wittpaths::detail
{

// Process-wide memo table, safe for concurrent readers and writers.
// Values are computed outside the lock; a racing duplicate computation
// produces the same value, so the first insert wins.
template <typename Key, typename Value>
class MemoTable
{
public:
    template <typename Compute>
    Value get_or_compute(const Key &key, Compute &&compute)
    {
        {
            std::shared_lock lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end()) {
                return it->second;
            }
        }
        Value value = compute();
        std::unique_lock lock(mutex_);
        return table_.try_emplace(key, std::move(value)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<Key, Value> table_;
};

} // namespace wittpaths::detail

#endif
