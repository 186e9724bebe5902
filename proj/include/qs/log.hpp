#pragma once

namespace qs {

// QS_LOG is a comma-separated tag list (e.g. "debug,trace,check").
// log_has("debug") also fires for QS_LOG=all.
bool log_has(const char* tag);

} // namespace qs
