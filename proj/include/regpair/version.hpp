#pragma once

#define REGPAIR_VERSION "0.1.0"
