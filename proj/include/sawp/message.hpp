#pragma once

#include <string>
#include <vector>

namespace sawp {

struct Message {
    std::string role; // "system" or "user"
    std::string content;
    bool operator==(const Message&) const = default;
};

// Chat-API shaped request: exactly one system message first, then user
// content.
struct MessageScript {
    std::vector<Message> messages;
    bool operator==(const MessageScript&) const = default;
};

} // namespace sawp
