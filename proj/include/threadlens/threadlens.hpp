#pragma once

#include "threadlens/codec.hpp"
#include "threadlens/dedup.hpp"
#include "threadlens/error.hpp"
#include "threadlens/metrics.hpp"
#include "threadlens/report_json.hpp"
#include "threadlens/restructure.hpp"
#include "threadlens/text.hpp"
#include "threadlens/thread.hpp"
#include "threadlens/topics.hpp"
