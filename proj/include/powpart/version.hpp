#ifndef POWPART_VERSION_HPP
#define POWPART_VERSION_HPP

#define POWPART_VERSION "0.1.0"

#endif
