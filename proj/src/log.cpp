#include "qs/log.hpp"

#include <cstdlib>
#include <mutex>
#include <set>
#include <sstream>
#include <string>

namespace qs {

namespace {

const std::set<std::string>& tags() {
    static std::set<std::string> parsed;
    static std::once_flag once;
    std::call_once(once, [] {
        const char* env = std::getenv("QS_LOG");
        if (!env) return;
        std::stringstream ss(env);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) parsed.insert(item);
        }
    });
    return parsed;
}

} // namespace

bool log_has(const char* tag) {
    const auto& t = tags();
    return t.count(tag) > 0 || t.count("all") > 0;
}

} // namespace qs
