namespace wug {}
