# frobmaps Core — Errors, Cache
