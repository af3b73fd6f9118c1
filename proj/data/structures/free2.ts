ts free2
constants 1 0 -1
generators x y
relations
end
