ts F1
constants 1 0 -1
generators x
relations
end
